#include "hcs/session.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "hcs/harish_chandra.hpp"
#include "hcs/torsion.hpp"

namespace hcs {

namespace {

class SemanticError : public Error {
 public:
  using Error::Error;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

bool is_open(char c) { return c == '(' || c == '{' || c == '['; }
bool is_close(char c) { return c == ')' || c == '}' || c == ']'; }

// Index of the bracket closing s[open].
std::size_t match_close(std::string_view s, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (is_open(s[i])) ++depth;
    if (is_close(s[i]) && --depth == 0) return i;
  }
  throw ParseError("unbalanced brackets in '" + std::string(s) + "'");
}

// Splits at depth-0 separators, honoring brackets and double quotes.
// Quotes are removed from the pieces.
std::vector<std::string> split_top(std::string_view s, std::string_view seps) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  bool quoted = false;
  bool any = false;
  auto flush = [&] {
    if (any) out.push_back(trim(cur));
    cur.clear();
    any = false;
  };
  for (char c : s) {
    if (c == '"') {
      quoted = !quoted;
      any = true;
      continue;
    }
    if (!quoted) {
      if (is_open(c)) ++depth;
      if (is_close(c)) {
        if (--depth < 0) throw ParseError("unbalanced brackets in '" + std::string(s) + "'");
      }
      if (depth == 0 && seps.find(c) != std::string_view::npos) {
        flush();
        continue;
      }
    }
    cur += c;
    if (!std::isspace(static_cast<unsigned char>(c))) any = true;
  }
  if (quoted) throw ParseError("unterminated quote in '" + std::string(s) + "'");
  if (depth != 0) throw ParseError("unbalanced brackets in '" + std::string(s) + "'");
  flush();
  return out;
}

std::vector<std::string> words(std::string_view s) { return split_top(s, " \t"); }

// "(a, b)" or "ideal(a, b)" -> "a, b".
std::optional<std::string> inline_list(std::string_view s) {
  std::string t = trim(s);
  std::size_t open;
  if (t.rfind("ideal(", 0) == 0) {
    open = 5;
  } else if (!t.empty() && t[0] == '(') {
    open = 0;
  } else {
    return std::nullopt;
  }
  if (match_close(t, open) != t.size() - 1) return std::nullopt;
  return t.substr(open + 1, t.size() - open - 2);
}

// "{a, b}" -> ["a", "b"].
std::vector<std::string> braced_items(std::string_view s) {
  std::string t = trim(s);
  if (t.size() < 2 || t.front() != '{' || t.back() != '}') throw ParseError("expected '{...}', got '" + t + "'");
  return split_top(std::string_view(t).substr(1, t.size() - 2), ",");
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string prime_list_str(const std::vector<PrimeIdeal>& primes) {
  std::string s = "[";
  for (std::size_t i = 0; i < primes.size(); ++i) s += (i ? ", " : "") + primes[i].to_string();
  return s + "]";
}

std::string status_str(const SubquotientHandle& h) {
  if (h.is_whole()) return "whole";
  if (h.is_zero()) return "zero";
  return "proper";
}

std::string chain_str(const ChainWitness& chain, const HCDatum& datum) {
  std::string s = chain.primes.front().to_string();
  for (std::size_t i = 0; i < chain.generator_indices.size(); ++i)
    s += " -" + datum.generators()[chain.generator_indices[i]].name() + "-> " + chain.primes[i + 1].to_string();
  return s;
}

MonomialOrder parse_order(const std::string& s) {
  if (s == "lex") return MonomialOrder::lex();
  if (s == "grevlex") return MonomialOrder::grevlex();
  if (s.rfind("block(", 0) == 0 && s.back() == ')') {
    auto inner = s.substr(6, s.size() - 7);
    if (inner.empty() || inner.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad block order '" + s + "'");
    return MonomialOrder::block(std::stoul(inner));
  }
  throw ParseError("unknown monomial order '" + s + "'");
}

int parse_int(const std::string& s, const std::string& what) {
  if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(what + " must be a non-negative integer, got '" + s + "'");
  return std::stoi(s);
}

class Session {
 public:
  explicit Session(const SessionOptions& options) : options_(options) {}

  SessionResult run(std::string_view text) {
    SessionResult result;
    std::ostringstream report;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
      ++line_no;
      std::string line = trim(raw.substr(0, raw.find('#')));
      if (line.empty()) continue;
      std::ostringstream block;
      notes_.clear();
      try {
        bool printed = execute(line, block);
        for (const auto& n : notes_) block << "note: " << n << "\n";
        if (printed) emit(report, line_no, line, block.str());
      } catch (const ParseError& e) {
        emit(report, line_no, line, "parse error: line " + std::to_string(line_no) + ": " + e.what() + "\n");
        result.exit_code = kParseError;
        break;
      } catch (const Error& e) {
        emit(report, line_no, line, "error: line " + std::to_string(line_no) + ": " + e.what() + "\n");
        result.exit_code = kSemanticError;
      }
    }
    result.report = report.str();
    return result;
  }

 private:
  void emit(std::ostringstream& report, std::size_t line_no, const std::string& line, const std::string& body) {
    if (options_.headers) report << "[" << line_no << "] " << line << "\n";
    report << body;
    if (options_.headers) report << "\n";
  }

  void note(const std::string& n) {
    if (std::find(notes_.begin(), notes_.end(), n) == notes_.end()) notes_.push_back(n);
  }

  // Returns true when the statement produced a result block.
  bool execute(const std::string& line, std::ostream& out) {
    auto space = line.find_first_of(" \t");
    std::string keyword = line.substr(0, space);
    std::string rest = space == std::string::npos ? "" : trim(line.substr(space));

    if (keyword == "ring") return declare_ring(rest), false;
    if (keyword == "weyl") return declare_weyl(rest), false;
    if (keyword == "generator") return declare_generator(rest), false;
    if (keyword == "ideal") return declare_ideal(rest), false;
    if (keyword == "prime") return declare_prime(rest), false;
    if (keyword == "module") return declare_module(rest), false;

    run_command(keyword, words(rest), out);
    return true;
  }

  // ---- declarations -------------------------------------------------------

  void declare_ring(const std::string& rest) {
    auto names = split_top(rest, ", \t");
    for (const auto& n : names)
      if (!is_identifier(n)) throw ParseError("bad variable name '" + n + "'");
    if (names.empty()) throw ParseError("ring needs at least one variable");
    if (ring_) throw SemanticError("ring already declared");
    ring_ = PolyRing::make(names);
  }

  void declare_weyl(const std::string& rest) {
    if (rest.rfind("n=", 0) != 0) throw ParseError("expected 'weyl n=<k>'");
    int n = parse_int(trim(rest.substr(2)), "weyl n");
    HCDatum w = weyl_datum(n);
    if (ring_ && !same_ring(*ring_, w.ring()))
      throw SemanticError("weyl n=" + std::to_string(n) + " needs ring t1..t" + std::to_string(n));
    if (!ring_) ring_ = w.ring();
    std::vector<HCGenerator> gens = datum_ ? datum_->generators() : std::vector<HCGenerator>{};
    for (const auto& g : w.generators()) gens.push_back(g);
    datum_.emplace(*ring_, std::move(gens));
  }

  Substitution parse_substitution(const std::string& text) {
    std::map<std::string, Poly> images;
    for (const auto& item : braced_items(text)) {
      auto arrow = item.find("->");
      if (arrow == std::string::npos) throw ParseError("expected 'var -> poly', got '" + item + "'");
      std::string var = trim(item.substr(0, arrow));
      if (!ring()->index_of(var)) throw SemanticError("unknown variable '" + var + "'");
      images.insert_or_assign(var, parse_poly(ring(), item.substr(arrow + 2)));
    }
    return Substitution::from_map(ring(), images);
  }

  void declare_generator(const std::string& rest) {
    auto [name, body] = split_declaration(rest);
    auto parts = words(body);
    if (parts.size() != 3 || parts[1] != "inverse")
      throw ParseError("expected 'generator <name> = {...} inverse {...}'");
    HCGenerator g(name, parse_substitution(parts[0]), parse_substitution(parts[2]));
    std::vector<HCGenerator> gens = datum_ ? datum_->generators() : std::vector<HCGenerator>{};
    gens.push_back(std::move(g));
    datum_.emplace(ring(), std::move(gens));
  }

  std::pair<std::string, std::string> split_declaration(const std::string& rest) {
    auto eq = rest.find('=');
    if (eq == std::string::npos) throw ParseError("expected '<name> = ...'");
    std::string name = trim(rest.substr(0, eq));
    if (!is_identifier(name)) throw ParseError("bad name '" + name + "'");
    claim_name(name);
    return {name, trim(rest.substr(eq + 1))};
  }

  void claim_name(const std::string& name) {
    if (ring_ && (*ring_)->index_of(name)) throw SemanticError("name '" + name + "' clashes with a ring variable");
    if (ideals_.count(name) || primes_.count(name) || modules_.count(name) || (datum_ && datum_->index_of(name)))
      throw SemanticError("name '" + name + "' already declared");
  }

  void declare_ideal(const std::string& rest) {
    auto [name, body] = split_declaration(rest);
    auto list = inline_list(body);
    if (!list) throw ParseError("expected '(<polys>)' or 'ideal(<polys>)'");
    ideals_.emplace(name, Ideal(ring(), parse_poly_list(ring(), *list)));
  }

  void declare_prime(const std::string& rest) {
    auto [name, body] = split_declaration(rest);
    auto cert_at = body.rfind("cert=");
    if (cert_at == std::string::npos) throw ParseError("prime declaration needs cert=<...>");
    Certificate cert = certificate_from_string(trim(body.substr(cert_at + 5)));
    auto list = inline_list(body.substr(0, cert_at));
    if (!list) throw ParseError("expected '(<polys>)' or 'ideal(<polys>)'");
    primes_.emplace(name, PrimeIdeal(Ideal(ring(), parse_poly_list(ring(), *list)), cert));
  }

  void declare_module(const std::string& rest) {
    auto [name, body] = split_declaration(rest);
    if (body.rfind("quotient(", 0) != 0) throw ParseError("expected 'quotient(<ideal>)'");
    std::size_t close = match_close(body, 8);
    Ideal defining = ideal_arg(trim(body.substr(9, close - 9)));
    std::string tail = trim(body.substr(close + 1));
    if (tail.empty()) {
      modules_.emplace(name, CyclicModule(defining));
      return;
    }
    if (tail.front() == '[') {
      if (tail.back() != ']') throw ParseError("unterminated '['");
      tail = trim(tail.substr(1, tail.size() - 2));
    }
    std::string list;
    if (tail.rfind("decomp:", 0) == 0) {
      list = tail.substr(7);
    } else if (tail.rfind("decomposition:", 0) == 0) {
      list = tail.substr(14);
    } else {
      throw ParseError("expected 'decomp: (<ideal>, <prime>); ...'");
    }
    std::vector<PrimaryComponent> comps;
    for (const auto& pair : split_top(list, ";,")) {
      if (pair.size() < 2 || pair.front() != '(' || pair.back() != ')')
        throw ParseError("expected '(<ideal>, <prime>)', got '" + pair + "'");
      auto items = split_top(std::string_view(pair).substr(1, pair.size() - 2), ",");
      if (items.size() != 2) throw ParseError("expected '(<ideal>, <prime>)', got '" + pair + "'");
      comps.push_back({ideal_arg(items[0]), prime_arg(items[1])});
    }
    modules_.emplace(name, CyclicModule(defining, std::move(comps)));
  }

  // ---- argument resolution ------------------------------------------------

  const RingPtr& ring() const {
    if (!ring_) throw SemanticError("no ring declared");
    return *ring_;
  }

  const HCDatum& datum() const {
    if (!datum_) throw SemanticError("no Harish-Chandra datum declared (use 'weyl n=<k>' or 'generator')");
    return *datum_;
  }

  Poly poly_arg(const std::string& s) { return parse_poly(ring(), s); }

  Ideal ideal_arg(const std::string& s) {
    if (auto it = ideals_.find(s); it != ideals_.end()) return it->second;
    if (auto it = primes_.find(s); it != primes_.end()) return checked(it->second).ideal();
    if (auto list = inline_list(s)) return Ideal(ring(), parse_poly_list(ring(), *list));
    if (is_identifier(s) && !ring()->index_of(s)) throw SemanticError("unknown ideal '" + s + "'");
    throw ParseError("expected an ideal name or '(<polys>)', got '" + s + "'");
  }

  const PrimeIdeal& checked(const PrimeIdeal& p) {
    if (p.conditional()) note("conditional on declared primality of " + p.to_string());
    return p;
  }

  PrimeIdeal prime_arg(const std::string& s) {
    if (auto it = primes_.find(s); it != primes_.end()) return checked(it->second);
    if (is_identifier(s) && !ring()->index_of(s)) throw SemanticError("unknown prime '" + s + "'");
    if (auto list = inline_list(s)) {
      auto gens = parse_poly_list(ring(), *list);
      if (gens.size() == 1) return PrimeIdeal::principal(gens.front());
      Ideal I(ring(), std::move(gens));
      for (auto cert : {Certificate::monomial, Certificate::linear_maximal}) {
        try {
          return PrimeIdeal(I, cert);
        } catch (const DomainError&) {
        }
      }
      return checked(PrimeIdeal(I, Certificate::declared));
    }
    return PrimeIdeal::principal(poly_arg(s));
  }

  std::vector<PrimeIdeal> prime_list_arg(const std::string& s) {
    std::vector<PrimeIdeal> out;
    for (const auto& item : braced_items(s)) out.push_back(prime_arg(item));
    return out;
  }

  const CyclicModule& module_arg(const std::string& s) {
    auto it = modules_.find(s);
    if (it == modules_.end()) throw SemanticError("unknown module '" + s + "'");
    for (const auto& n : it->second.notes()) note(n);
    return it->second;
  }

  SpecSubset z_arg(const std::string& s) {
    if (s.rfind("Z<=", 0) == 0) return CoheightAtMost{parse_int(s.substr(3), "Z<= bound")};
    if (s.rfind("up(", 0) == 0 && s.back() == ')') {
      std::vector<PrimeIdeal> primes;
      for (const auto& item : split_top(std::string_view(s).substr(3, s.size() - 4), ","))
        primes.push_back(prime_arg(item));
      return UpClosureOf(std::move(primes));
    }
    throw ParseError("expected 'Z<=<i>' or 'up(<primes>)', got '" + s + "'");
  }

  std::size_t generator_arg(const std::string& s) {
    auto k = datum().index_of(s);
    if (!k) throw SemanticError("unknown generator '" + s + "'");
    return *k;
  }

  void note_non_principal(const PrimeIdeal& p) {
    if (p.ideal().groebner_basis().size() > 1)
      note("non-principal prime " + p.to_string() + ": relation computed by shifting every generator");
  }

  static void arity(const std::vector<std::string>& args, std::size_t lo, std::size_t hi, const std::string& usage) {
    if (args.size() < lo || args.size() > hi) throw ParseError("usage: " + usage);
  }

  // ---- commands -----------------------------------------------------------

  void run_command(const std::string& cmd, const std::vector<std::string>& a, std::ostream& out) {
    if (cmd == "gb") {
      arity(a, 1, 2, "gb <ideal> [lex|grevlex|block(k)]");
      auto order = a.size() == 2 ? parse_order(a[1]) : MonomialOrder::grevlex();
      Ideal I = ideal_arg(a[0]);
      const auto& gb = I.groebner_basis(order);
      out << "gb = {";
      for (std::size_t i = 0; i < gb.size(); ++i) out << (i ? ", " : "") << gb[i].to_string();
      out << "}\n";
    } else if (cmd == "nf") {
      arity(a, 2, 3, "nf <ideal> <poly> [order]");
      auto order = a.size() == 3 ? parse_order(a[2]) : MonomialOrder::grevlex();
      out << "nf = " << normal_form(poly_arg(a[1]), ideal_arg(a[0]), order).to_string() << "\n";
    } else if (cmd == "member") {
      arity(a, 2, 2, "member <ideal> <poly>");
      out << "member = " << bool_str(contains(ideal_arg(a[0]), poly_arg(a[1]))) << "\n";
    } else if (cmd == "dim") {
      arity(a, 1, 1, "dim <ideal>");
      out << "dim = " << dimension(ideal_arg(a[0])) << "\n";
    } else if (cmd == "coheight") {
      arity(a, 1, 1, "coheight <prime>");
      out << "coheight = " << coheight(prime_arg(a[0])) << "\n";
    } else if (cmd == "height") {
      arity(a, 1, 1, "height <prime>");
      out << "height = " << height(prime_arg(a[0])) << "\n";
    } else if (cmd == "sum") {
      arity(a, 2, 2, "sum <ideal> <ideal>");
      out << "sum = " << ideal_sum(ideal_arg(a[0]), ideal_arg(a[1])).to_string() << "\n";
    } else if (cmd == "product") {
      arity(a, 2, 2, "product <ideal> <ideal>");
      out << "product = " << ideal_product(ideal_arg(a[0]), ideal_arg(a[1])).to_string() << "\n";
    } else if (cmd == "intersect") {
      arity(a, 2, 2, "intersect <ideal> <ideal>");
      out << "intersect = " << ideal_intersection(ideal_arg(a[0]), ideal_arg(a[1])).to_string() << "\n";
    } else if (cmd == "quotient") {
      arity(a, 2, 2, "quotient <ideal> <poly|ideal>");
      Ideal I = ideal_arg(a[0]);
      bool by_ideal = ideals_.count(a[1]) || primes_.count(a[1]) || inline_list(a[1]).has_value();
      Ideal q = by_ideal ? ideal_quotient(I, ideal_arg(a[1])) : ideal_quotient(I, poly_arg(a[1]));
      out << "quotient = " << q.to_string() << "\n";
    } else if (cmd == "saturate") {
      arity(a, 2, 2, "saturate <ideal> <ideal>");
      out << "saturate = " << saturation(ideal_arg(a[0]), ideal_arg(a[1])).to_string() << "\n";
    } else if (cmd == "comaximal") {
      arity(a, 2, 2, "comaximal <ideal> <ideal>");
      out << "comaximal = " << bool_str(is_comaximal(ideal_arg(a[0]), ideal_arg(a[1]))) << "\n";
    } else if (cmd == "radmember") {
      arity(a, 2, 2, "radmember <ideal> <poly>");
      out << "radmember = " << bool_str(radical_membership(poly_arg(a[1]), ideal_arg(a[0]))) << "\n";
    } else if (cmd == "mul") {
      arity(a, 2, 2, "mul <poly> <poly>");
      out << "mul = " << (poly_arg(a[0]) * poly_arg(a[1])).to_string() << "\n";
    } else if (cmd == "lt") {
      arity(a, 1, 2, "lt <poly> [order]");
      auto order = a.size() == 2 ? parse_order(a[1]) : MonomialOrder::grevlex();
      auto [m, c] = leading_term(poly_arg(a[0]), order);
      out << "lt = (" << Poly::monomial(ring(), m).to_string() << ", " << to_string(c) << ")\n";
    } else if (cmd == "shift") {
      arity(a, 2, 2, "shift <poly> {var -> poly, ...}");
      out << "shift = " << parse_substitution(a[1]).apply(poly_arg(a[0])).to_string() << "\n";
    } else if (cmd == "min") {
      arity(a, 1, 1, "min {<primes>}");
      out << "min = " << prime_list_str(min_elements(prime_list_arg(a[0]))) << "\n";
    } else if (cmd == "in-z") {
      arity(a, 2, 2, "in-z <prime> Z<=i|up(<primes>)");
      out << "in-z = " << bool_str(z_contains(z_arg(a[1]), prime_arg(a[0]))) << "\n";
    } else if (cmd == "ass") {
      arity(a, 1, 1, "ass <module>");
      out << "ass = " << prime_list_str(ass_module(module_arg(a[0]))) << "\n";
    } else if (cmd == "minsupp") {
      arity(a, 1, 1, "minsupp <module>");
      out << "minsupp = " << prime_list_str(min_supp(module_arg(a[0]))) << "\n";
    } else if (cmd == "torsion") {
      arity(a, 2, 2, "torsion <module> Z<=i|up(<primes>)");
      const auto& M = module_arg(a[0]);
      auto t = torsion_radical(M, z_arg(a[1]));
      out << "torsion = " << t.to_string() << "\n" << "status = " << status_str(t) << "\n";
    } else if (cmd == "strata") {
      arity(a, 1, 1, "strata <module>");
      auto profile = strata_profile(module_arg(a[0]));
      for (const auto& s : profile.strata)
        out << "t" << s.index << ": nonzero=" << bool_str(s.nonzero) << " whole=" << bool_str(s.whole) << "\n";
      out << "stratum = " << (profile.pure ? std::to_string(*profile.pure) : "mixed") << "\n";
    } else if (cmd == "pcomp") {
      arity(a, 2, 2, "pcomp <module> <prime>");
      const auto& M = module_arg(a[0]);
      auto part = p_component(M, prime_arg(a[1]));
      out << "pcomp = " << part.to_string() << "\n" << "status = " << status_str(part) << "\n";
    } else if (cmd == "decompose") {
      arity(a, 1, 1, "decompose <module>");
      auto crt = crt_decompose(module_arg(a[0]));
      auto dim_str = [](const std::optional<std::size_t>& d) { return d ? std::to_string(*d) : std::string("inf"); };
      for (const auto& c : crt.components)
        out << "component " << c.prime.to_string() << ": " << c.part.to_string() << " dim=" << dim_str(c.vector_space_dim)
            << "\n";
      out << "direct = " << bool_str(crt.direct) << "\n";
      out << "covers = " << bool_str(crt.covers) << "\n";
      out << "module_dim = " << dim_str(crt.module_dim) << "\n";
      for (const auto& w : crt.warnings) out << "warning: " << w << "\n";
    } else if (cmd == "homzero") {
      arity(a, 2, 2, "homzero <ideal> <ideal>");
      out << "homzero = " << bool_str(hom_cyclic_is_zero(ideal_arg(a[0]), ideal_arg(a[1]))) << "\n";
    } else if (cmd == "regseq") {
      std::vector<Poly> seq;
      for (const auto& s : a) seq.push_back(poly_arg(s));
      out << "regseq = " << bool_str(is_regular_sequence(ring(), seq)) << "\n";
    } else if (cmd == "hc-equiv") {
      if (a.size() != 4 || a[2] != "via") throw ParseError("usage: hc-equiv <q> <p> via <generator>");
      auto q = prime_arg(a[0]);
      auto p = prime_arg(a[1]);
      const auto& u = datum().generators()[generator_arg(a[3])];
      note_non_principal(q);
      note_non_principal(p);
      out << "related = " << bool_str(equiv_u(q, p, u)) << "\n";
    } else if (cmd == "hc-reach" || cmd == "ass-bound") {
      if (a.size() != 5 || a[1] != "in" || a[3] != "depth")
        throw ParseError("usage: " + cmd + " <prime> in {<primes>} depth <d>");
      auto anchor = prime_arg(a[0]);
      auto candidates = prime_list_arg(a[2]);
      int depth = parse_int(a[4], "depth");
      note_non_principal(anchor);
      for (const auto& c : candidates) note_non_principal(c);
      if (cmd == "hc-reach") {
        auto found = equiv_reachable(anchor, candidates, datum(), depth);
        out << "reachable = " << found.size() << "\n";
        for (const auto& r : found)
          out << r.prime.to_string() << ": steps=" << r.chain.length() << " " << chain_str(r.chain, datum()) << "\n";
      } else {
        auto bound = assassin_bound(anchor, candidates, datum(), depth);
        out << "ass-bound = " << prime_list_str(bound.admitted) << "\n";
        for (std::size_t i = 1; i < bound.admitted.size(); ++i)
          out << bound.admitted[i].to_string() << ": " << chain_str(bound.chains[i], datum()) << "\n";
      }
    } else if (cmd == "hc-matrix") {
      arity(a, 1, 1, "hc-matrix {<primes>}");
      auto candidates = prime_list_arg(a[0]);
      auto m = single_step_matrix(candidates, datum());
      const auto& gens = datum().generators();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        out << gens[k].name() << ":";
        for (std::size_t i = 0; i < candidates.size(); ++i) {
          out << " ";
          for (std::size_t j = 0; j < candidates.size(); ++j) out << (m[i][j][k] ? '1' : '0');
        }
        out << "\n";
      }
    } else {
      throw ParseError("unknown command '" + cmd + "'");
    }
  }

  SessionOptions options_;
  std::optional<RingPtr> ring_;
  std::map<std::string, Ideal> ideals_;
  std::map<std::string, PrimeIdeal> primes_;
  std::map<std::string, CyclicModule> modules_;
  std::optional<HCDatum> datum_;
  std::vector<std::string> notes_;
};

}  // namespace

SessionResult run_session_text(std::string_view text, const SessionOptions& options) {
  return Session(options).run(text);
}

SessionResult run_session_file(const std::filesystem::path& path, const SessionOptions& options) {
  std::ifstream in(path);
  if (!in) return {kSemanticError, "error: cannot open " + path.string() + "\n"};
  std::stringstream buf;
  buf << in.rdbuf();
  return run_session_text(buf.str(), options);
}

}  // namespace hcs
