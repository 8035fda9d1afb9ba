#include "bialg/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bialg {

Rat parse_rat(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw ParseError("empty rational");
  std::size_t slash = s.find('/');
  auto check_int = [&](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t k = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) k = 1;
    if (k == part.size()) return false;
    for (; k < part.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(part[k]))) return false;
    return true;
  };
  try {
    if (slash == std::string::npos) {
      if (!check_int(s, true)) throw ParseError("bad rational '" + text + "'");
      return Rat(Int(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!check_int(num, true) || !check_int(den, false))
      throw ParseError("bad rational '" + text + "'");
    Rat q{Int(num), Int(den)};
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational '" + text + "'");
  }
}

std::string rat_str(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

Rat frac(long num, long den) {
  if (den == 0) throw Error("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [name, e] : factors) d += e;
  return d;
}

Monomial mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto ia = a.factors.begin(), ib = b.factors.begin();
  while (ia != a.factors.end() || ib != b.factors.end()) {
    if (ib == b.factors.end() || (ia != a.factors.end() && ia->first < ib->first)) {
      out.factors.push_back(*ia++);
    } else if (ia == a.factors.end() || ib->first < ia->first) {
      out.factors.push_back(*ib++);
    } else {
      out.factors.emplace_back(ia->first, ia->second + ib->second);
      ++ia, ++ib;
    }
  }
  return out;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Walk the union of names in ascending order; the monomial with the higher
  // exponent on the earliest differing name is the larger one.
  auto ia = a.factors.begin(), ib = b.factors.begin();
  while (ia != a.factors.end() && ib != b.factors.end()) {
    if (ia->first == ib->first) {
      if (ia->second != ib->second) return ia->second < ib->second;
      ++ia, ++ib;
    } else if (ia->first < ib->first) {
      return false;  // a has positive exponent on the earlier name: a larger
    } else {
      return true;
    }
  }
  if (ia != a.factors.end()) return false;
  if (ib != b.factors.end()) return true;
  return false;
}

Scalar::Scalar(int n) {
  if (n != 0) terms_.emplace(Monomial{}, Rat(n));
}

Scalar::Scalar(const Rat& q) {
  // canonicalize on ingestion: exact map equality relies on canonical mpq form
  if (q != 0) {
    Rat c = q;
    c.canonicalize();
    terms_.emplace(Monomial{}, std::move(c));
  }
}

Scalar Scalar::variable(const std::string& name) {
  Scalar s;
  Monomial m;
  m.factors.emplace_back(name, 1);
  s.terms_.emplace(std::move(m), Rat(1));
  return s;
}

void Scalar::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Scalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool Scalar::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

Rat Scalar::rational() const {
  if (terms_.empty()) return Rat(0);
  if (!is_rational()) throw Error("scalar '" + str() + "' is not a plain rational");
  return terms_.begin()->second;
}

Scalar Scalar::operator-() const {
  Scalar out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(mul(ma, mb), ca * cb);
  return out;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

Scalar Scalar::div_rat(const Rat& q) const {
  if (q == 0) throw Error("division by zero");
  Scalar out(*this);
  for (auto& [m, c] : out.terms_) c /= q;
  return out;
}

Scalar Scalar::pow(int k) const {
  if (k < 0) throw Error("negative power of a scalar");
  Scalar out(1);
  for (int i = 0; i < k; ++i) out *= *this;
  return out;
}

Scalar Scalar::substitute(const std::map<std::string, Scalar>& bindings) const {
  Scalar out;
  for (const auto& [m, c] : terms_) {
    Scalar term(c);
    Monomial rest;
    for (const auto& [name, e] : m.factors) {
      auto it = bindings.find(name);
      if (it == bindings.end())
        rest.factors.emplace_back(name, e);
      else
        term *= it->second.pow(e);
    }
    Scalar mono;
    mono.terms_.emplace(rest, Rat(1));
    out += term * mono;
  }
  return out;
}

std::set<std::string> Scalar::variables() const {
  std::set<std::string> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& [name, e] : m.factors) vars.insert(name);
  return vars;
}

int Scalar::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    return s.substr(start, pos - start);
  }
  std::string name() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }
};

Scalar parse_factor(Lexer& lx) {
  char c = lx.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) return Scalar(parse_rat(lx.number()));
  if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
    std::string var = lx.name();
    Scalar base = Scalar::variable(var);
    if (lx.accept('^')) {
      std::string e = lx.number();
      if (e.empty() || e.find('/') != std::string::npos)
        throw ParseError("bad exponent after '" + var + "^'");
      return base.pow(std::stoi(e));
    }
    return base;
  }
  throw ParseError(std::string("unexpected character '") + c + "' in scalar");
}

}  // namespace

Scalar Scalar::parse(const std::string& text) {
  Lexer lx{text};
  if (lx.done()) throw ParseError("empty scalar");
  Scalar out;
  bool first = true;
  while (!lx.done()) {
    int sign = 1;
    if (lx.accept('-'))
      sign = -1;
    else if (lx.accept('+')) {
      if (first) throw ParseError("leading '+' in scalar");
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms in '" + text + "'");
    }
    Scalar term = parse_factor(lx);
    while (lx.accept('*')) term *= parse_factor(lx);
    if (sign < 0) term = -term;
    out += term;
    first = false;
  }
  return out;
}

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Leading (largest) monomial first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Monomial& m = it->first;
    Rat c = it->second;
    bool neg = c < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    Rat a = neg ? Rat(-c) : c;
    if (m.is_one()) {
      os << a;
    } else {
      if (a != 1) os << a << '*';
      bool fst = true;
      for (const auto& [name, e] : m.factors) {
        if (!fst) os << '*';
        os << name;
        if (e > 1) os << '^' << e;
        fst = false;
      }
    }
    first = false;
  }
  return os.str();
}

Scalar operator+(Scalar a, const Scalar& b) {
  a += b;
  return a;
}

Scalar operator-(Scalar a, const Scalar& b) {
  a -= b;
  return a;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace bialg
