#include "twistq/syntax.hpp"

#include <cctype>
#include <numeric>

namespace twistq {

namespace {

class Cursor {
 public:
  Cursor(std::string_view s, int L) : s_(s), L_(L) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }
  std::size_t pos() const { return pos_; }
  int order() const { return L_; }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  long nat() {
    if (!at_digit()) fail("expected a number");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1000000000L) fail("number too large");
      ++pos_;
    }
    return v;
  }

  long sint() {
    const bool neg = accept('-');
    if (!neg) accept('+');
    const long v = nat();
    return neg ? -v : v;
  }

  // sint | '(' sint ['/' nat] ')'
  HalfInt qexp() {
    if (accept('(')) {
      const long num = sint();
      long den = 1;
      if (accept('/')) den = nat();
      expect(')');
      if (den == 0) fail("zero denominator");
      try {
        return HalfInt::from_rational(make_rational(num, den));
      } catch (const InputError&) {
        fail("q-exponent must lie in (1/2)Z");
      }
    }
    return HalfInt(sint());
  }

  // One multiplicative factor of a parameter or scalar term, folded into u.
  // Returns false when the next character does not start a factor.
  bool factor(Unit& u, bool allow_numbers) {
    const char c = peek();
    if (c == 'q') {
      ++pos_;
      HalfInt r(1);
      if (accept('^')) r = qexp();
      u.q += r;
      return true;
    }
    if (c == 'u') {
      ++pos_;
      long e = 1;
      if (accept('^')) e = sint();
      u.u += static_cast<int>(e);
      return true;
    }
    if (c == 'z') {
      ++pos_;
      const std::size_t at = pos_;
      const long m = nat();
      if (m <= 0 || L_ % m != 0) throw ParseError(at, "zeta_" + std::to_string(m) + " is not available (L = " + std::to_string(L_) + ")");
      long e = 1;
      if (accept('^')) e = sint();
      u.coeff = u.coeff * Cyclo::zeta_power(L_, e * (L_ / m));
      return true;
    }
    if (c == '(' && allow_numbers) {
      const std::size_t at = pos_;
      ++pos_;
      const Scalar inner = scalar();
      expect(')');
      if (!inner.is_unit()) throw ParseError(at, "parenthesised factor must be a monomial in q and u");
      u = u * inner.to_unit();
      return true;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      const long num = nat();
      long den = 1;
      if (accept('/')) den = nat();
      if (den == 0) throw ParseError(at, "zero denominator");
      const Rational r = make_rational(num, den);
      if (!allow_numbers && r != 1) throw ParseError(at, "malformed parameter: numeric factor off the mu_L q^(Z/2) grid");
      if (r == 0) throw ParseError(at, "zero factor");
      u.coeff = u.coeff * Cyclo(L_, r);
      return true;
    }
    return false;
  }

  Unit term(bool allow_numbers) {
    Unit u = Unit::one(L_);
    if (accept('-')) {
      if (L_ % 2 != 0) fail("-1 is not available");
      u = -u;
    }
    if (!factor(u, allow_numbers)) fail("expected q, u, z<m> or a number");
    while (accept('*'))
      if (!factor(u, allow_numbers)) fail("expected q, u, z<m> or a number after '*'");
    return u;
  }

  Scalar scalar();

  bool starts_with(std::string_view w) {
    skip_ws();
    return s_.substr(pos_, w.size()) == w;
  }
  void advance(std::size_t n) { pos_ += n; }

 private:
  std::string_view s_;
  int L_;
  std::size_t pos_ = 0;
};

Scalar Cursor::scalar() {
  Scalar s(L_);
  s += Scalar(term(true));
  while (true) {
    const char c = peek();
    if (c == '+') {
      ++pos_;
      s += Scalar(term(true));
    } else if (c == '-') {
      s += Scalar(term(true));
    } else {
      break;
    }
  }
  return s;
}

SpectralParam read_param(Cursor& c) {
  const std::size_t at = c.pos();
  const Unit u = c.term(false);
  try {
    return SpectralParam::from_unit(u);
  } catch (const UnsupportedError&) {
    throw ParseError(at, "malformed parameter");
  }
}

GenMonomial read_expr(Cursor& c, const CartanData& cd);

GenMonomial read_atom(Cursor& c, const CartanData& cd) {
  if (c.accept('(')) {
    GenMonomial m = read_expr(c, cd);
    c.expect(')');
    return m;
  }
  GenKind kind;
  if (c.starts_with("Yt")) {
    kind = GenKind::Ytilde;
    c.advance(2);
  } else if (c.starts_with("Y")) {
    kind = GenKind::Y;
    c.advance(1);
  } else if (c.starts_with("P")) {
    kind = GenKind::Psi;
    c.advance(1);
  } else if (c.starts_with("A")) {
    kind = GenKind::A;
    c.advance(1);
  } else if (c.starts_with("c")) {
    c.advance(1);
    c.expect('[');
    std::vector<Unit> gamma;
    do {
      const std::size_t at = c.pos();
      const Scalar s = c.scalar();
      if (!s.is_unit()) throw ParseError(at, "constant must be a monomial unit");
      gamma.push_back(s.to_unit());
    } while (c.accept(','));
    c.expect(']');
    if (static_cast<int>(gamma.size()) != cd.rank())
      c.fail("c[...] needs " + std::to_string(cd.rank()) + " entries for " + cd.type.token());
    GenMonomial m = GenMonomial::identity(cd.type);
    m.mul_gamma(gamma);
    return m;
  } else {
    c.fail("expected Y, Yt, P, A, c or '('");
  }
  c.expect('[');
  const std::size_t at = c.pos();
  const long node = c.nat();
  if (cd.index_of(static_cast<int>(node)) < 0)
    throw ParseError(at, "index " + std::to_string(node) + " is not in I0 for " + cd.type.token());
  c.expect(',');
  const SpectralParam a = read_param(c);
  c.expect(']');
  GenMonomial m = GenMonomial::identity(cd.type);
  m.add(cd, kind, static_cast<int>(node), a, 1);
  return m;
}

GenMonomial read_factor(Cursor& c, const CartanData& cd) {
  GenMonomial m = read_atom(c, cd);
  if (c.accept('^')) m = m.pow(static_cast<int>(c.sint()));
  return m;
}

GenMonomial read_expr(Cursor& c, const CartanData& cd) {
  GenMonomial m = read_factor(c, cd);
  while (c.accept('*')) m = m * read_factor(c, cd);
  return m;
}

std::string root_token(int L, int k) {
  k = static_cast<int>(mod_floor(k, L));
  const int g = std::gcd(k, L);
  const int m = L / g;
  const int j = k / g;
  return "z" + std::to_string(m) + (j == 1 ? "" : "^" + std::to_string(j));
}

std::string q_token(HalfInt r) {
  if (r.twice() == 2) return "q";
  if (r.is_integer()) return "q^" + std::to_string(r.integer());
  return "q^(" + std::to_string(r.twice()) + "/2)";
}

// Writes c as sign, rational and root-of-unity parts when possible.
bool split_coeff(const Cyclo& c, Rational& r, int& k) {
  const int L = c.order();
  for (int t = 0; t < L; ++t) {
    const Cyclo x = c * Cyclo::zeta_power(L, -t);
    if (x.is_rational() && x.coords()[0] > 0) {
      r = x.coords()[0];
      k = t;
      return true;
    }
  }
  return false;
}

std::string cyclo_sum(const Cyclo& c) {
  std::string out;
  const auto& v = c.coords();
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    const bool neg = v[k] < 0;
    const Rational a = neg ? Rational(-v[k]) : v[k];
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    std::string part;
    if (k == 0 || a != 1) part = a.get_str();
    if (k > 0) part += (part.empty() ? "" : "*") + root_token(c.order(), static_cast<int>(k));
    out += part;
  }
  return out;
}

}  // namespace

SpectralParam parse_param(std::string_view src, int L) {
  Cursor c(src, L);
  const SpectralParam p = read_param(c);
  if (!c.done()) c.fail("trailing input after parameter");
  return p;
}

std::string format_param(const SpectralParam& p) { return format_unit(Unit::of(p)); }

Scalar parse_scalar(std::string_view src, int L) {
  Cursor c(src, L);
  Scalar s = c.scalar();
  if (!c.done()) c.fail("trailing input after scalar");
  return s;
}

Unit parse_unit(std::string_view src, int L) {
  const Scalar s = parse_scalar(src, L);
  if (!s.is_unit()) throw InputError("expected a monomial unit, got '" + std::string(src) + "'");
  return s.to_unit();
}

std::string format_unit(const Unit& u) {
  const int L = u.order();
  std::string out;
  Rational r;
  int k = 0;
  std::vector<std::string> parts;
  if (split_coeff(u.coeff, r, k)) {
    if (L % 2 == 0 && k >= L / 2) {
      out = "-";
      k -= L / 2;
    }
    if (r != 1) parts.push_back(r.get_str());
    if (k != 0) parts.push_back(root_token(L, k));
  } else {
    parts.push_back("(" + cyclo_sum(u.coeff) + ")");
  }
  if (u.q.twice() != 0) parts.push_back(q_token(u.q));
  if (u.u != 0) parts.push_back("u^" + std::to_string(u.u));
  if (parts.empty()) return out + "1";
  for (std::size_t t = 0; t < parts.size(); ++t) out += (t ? "*" : "") + parts[t];
  return out;
}

std::string format_scalar(const Scalar& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [key, c] : s.terms()) {
    std::string t = format_unit(Unit(c, key.first, key.second));
    if (!out.empty()) out += t[0] == '-' ? "" : "+";
    out += t;
  }
  return out;
}

GenMonomial parse_lweight(std::string_view src, const CartanData& cd) {
  Cursor c(src, cd.L);
  if (c.done()) c.fail("empty expression");
  GenMonomial m = read_expr(c, cd);
  if (!c.done()) c.fail("unexpected trailing input");
  return m;
}

std::string format_monomial(const GenMonomial& m) {
  std::vector<std::string> parts;
  if (!m.gamma_trivial()) {
    std::string g = "c[";
    for (std::size_t k = 0; k < m.gamma.size(); ++k) g += (k ? "," : "") + format_unit(m.gamma[k]);
    parts.push_back(g + "]");
  }
  for (const auto& [key, e] : m.exps) {
    std::string s = std::string(gen_symbol(key.kind)) + "[" + std::to_string(key.node) + "," + format_param(key.param) + "]";
    if (e != 1) s += "^" + std::to_string(e);
    parts.push_back(s);
  }
  if (parts.empty()) {
    std::string g = "c[";
    for (int k = 0; k < m.type.rank(); ++k) g += k ? ",1" : "1";
    return g + "]";
  }
  std::string out;
  for (std::size_t t = 0; t < parts.size(); ++t) out += (t ? "*" : "") + parts[t];
  return out;
}

std::string format_rational(const RationalFn& f) {
  std::string num, den;
  int nden = 0;
  for (const auto& [a, m] : f.factors()) {
    std::string p = format_param(a);
    std::string lin;
    if (p == "1") {
      lin = "(1-z)";
    } else if (p == "-1") {
      lin = "(1+z)";
    } else if (p[0] == '-') {
      lin = "(1+" + p.substr(1) + "*z)";
    } else {
      lin = "(1-" + p + "*z)";
    }
    const int e = m > 0 ? m : -m;
    if (e != 1) lin += "^" + std::to_string(e);
    if (m > 0) {
      num += lin;
    } else {
      den += lin;
      nden += e;
    }
  }
  std::string out;
  const std::string c = format_unit(f.constant());
  if (c != "1" || (num.empty() && den.empty() && f.zpow() == 0)) out = c;
  if (f.zpow() != 0) out += (out.empty() ? "" : "*") + std::string("z^") + std::to_string(f.zpow());
  if (!num.empty()) out += (out.empty() ? "" : "*") + num;
  if (!den.empty()) out += (out.empty() ? "1" : "") + std::string("/") + (nden > 1 ? "(" + den + ")" : den);
  return out;
}

std::string format_lweight(const LWeight& x) {
  std::string out = "(";
  for (std::size_t k = 0; k < x.size(); ++k) out += (k ? ", " : "") + format_rational(x.components()[k]);
  return out + ")";
}

}  // namespace twistq
