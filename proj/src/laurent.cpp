#include "skeinalt/laurent.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace skeinalt {

LaurentPoly LaurentPoly::monomial(BigInt c, int exponent) {
  LaurentPoly p;
  if (c != 0) p.coeffs_[exponent] = std::move(c);
  return p;
}

LaurentPoly LaurentPoly::loop_value() {
  LaurentPoly p;
  p.coeffs_[-1] = 1;
  p.coeffs_[1] = 1;
  return p;
}

BigInt LaurentPoly::coeff(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (is_zero()) fail(ErrorCode::Invalid, "min_exponent of zero polynomial");
  return coeffs_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (is_zero()) fail(ErrorCode::Invalid, "max_exponent of zero polynomial");
  return coeffs_.rbegin()->first;
}

void LaurentPoly::add_term(int exponent, const BigInt& c) {
  if (c == 0) return;
  auto it = coeffs_.find(exponent);
  if (it == coeffs_.end()) {
    coeffs_[exponent] = c;
    return;
  }
  it->second += c;
  if (it->second == 0) coeffs_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.coeffs_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.coeffs_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) out.coeffs_[e] = -c;
  return out;
}

LaurentPoly LaurentPoly::shifted(int d) const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) out.coeffs_[e + d] = c;
  return out;
}

namespace {

void render_term(std::ostringstream& os, const BigInt& magnitude, int exponent) {
  if (magnitude != 1 || exponent == 0) os << magnitude.str();
  if (exponent == 0) return;
  os << 'q';
  if (exponent != 1) os << '^' << exponent;
}

}  // namespace

std::string LaurentPoly::to_text() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    render_term(os, mag, e);
  }
  return os.str();
}

LaurentPoly LaurentPoly::from_text(const std::string& text) {
  LaurentPoly out;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) fail(ErrorCode::Parse, "empty polynomial text");
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    skip_ws();
    if (!first || text[i] == '+' || text[i] == '-') {
      if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
        fail(ErrorCode::Parse, "expected '+' or '-' in polynomial at offset " + std::to_string(i));
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    }
    first = false;
    // magnitude (optional when followed by q)
    std::string digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
    BigInt mag = digits.empty() ? BigInt(1) : BigInt(digits);
    int exponent = 0;
    if (i < text.size() && text[i] == 'q') {
      ++i;
      exponent = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        bool neg = false;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
        std::string ed;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ed += text[i++];
        if (ed.empty()) fail(ErrorCode::Parse, "missing exponent digits at offset " + std::to_string(i));
        exponent = std::stoi(ed);
        if (neg) exponent = -exponent;
      }
    } else if (digits.empty()) {
      fail(ErrorCode::Parse, "expected term at offset " + std::to_string(i));
    }
    out.add_term(exponent, sign < 0 ? BigInt(-mag) : mag);
    skip_ws();
  }
  return out;
}

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, c] : coeffs_) {
    if (c > BigInt(std::numeric_limits<std::int64_t>::max()) ||
        c < BigInt(std::numeric_limits<std::int64_t>::min()))
      fail(ErrorCode::Unsupported, "coefficient exceeds JSON integer range");
    j[std::to_string(e)] = static_cast<std::int64_t>(c);
  }
  return j;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(ErrorCode::Parse, "polynomial JSON must be an object");
  LaurentPoly out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    int e = 0;
    try {
      e = std::stoi(it.key());
    } catch (const std::exception&) {
      fail(ErrorCode::Parse, "bad exponent key '" + it.key() + "'");
    }
    if (!it.value().is_number_integer()) fail(ErrorCode::Parse, "coefficient must be an integer");
    out.add_term(e, BigInt(it.value().get<std::int64_t>()));
  }
  return out;
}

std::pair<LeadingTerm, LeadingTerm> leading_terms(const LaurentPoly& p) {
  if (p.is_zero()) fail(ErrorCode::Invalid, "leading_terms of zero polynomial");
  auto mk = [](int e, const BigInt& c) {
    return LeadingTerm{c < 0 ? -1 : 1, c < 0 ? BigInt(-c) : c, e};
  };
  const auto& t = p.terms();
  return {mk(t.begin()->first, t.begin()->second), mk(t.rbegin()->first, t.rbegin()->second)};
}

bool is_alternating_poly(const LaurentPoly& p) {
  if (p.is_zero()) return true;
  const auto& t = p.terms();
  int base = t.begin()->first;
  // One exponent parity overall; two residue classes mod 4, sign-homogeneous
  // within a class and opposite across classes.
  int sign_same = 0, sign_other = 0;  // 0 unseen, else +-1
  for (const auto& [e, c] : t) {
    if (((e - base) % 2 + 2) % 2 != 0) return false;
    int s = c < 0 ? -1 : 1;
    int& slot = mod4(static_cast<long long>(e) - base) == 0 ? sign_same : sign_other;
    if (slot == 0)
      slot = s;
    else if (slot != s)
      return false;
  }
  if (sign_same != 0 && sign_other != 0 && sign_same == sign_other) return false;
  return true;
}

ParityClass parity_class(const LaurentPoly& p) {
  if (p.is_zero()) fail(ErrorCode::Invalid, "parity_class of zero polynomial");
  if (!is_alternating_poly(p)) fail(ErrorCode::Invalid, "parity_class of non-alternating polynomial");
  for (const auto& [e, c] : p.terms())
    if (c > 0) return ParityClass{static_cast<std::uint8_t>(mod4(e))};
  // Only negative coefficients: positives would sit two steps away.
  return ParityClass{static_cast<std::uint8_t>(mod4(p.terms().begin()->first + 2))};
}

LaurentPoly div_exact(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.is_zero()) fail(ErrorCode::Invalid, "division by zero polynomial");
  if (p.is_zero()) return LaurentPoly();
  // Shift to ordinary polynomials and long-divide from the top; the quotient,
  // when it exists over Z[q,q^-1], is found step by step.
  const int ps = p.min_exponent(), ds = d.min_exponent();
  LaurentPoly r = p.shifted(-ps);
  LaurentPoly dd = d.shifted(-ds);
  const int ddeg = dd.max_exponent();
  const BigInt dlead = dd.coeff(ddeg);
  LaurentPoly quot;
  while (!r.is_zero() && r.max_exponent() >= ddeg) {
    const int e = r.max_exponent() - ddeg;
    const BigInt c = r.coeff(r.max_exponent());
    if (c % dlead != 0) fail(ErrorCode::Invalid, "polynomial division is not exact");
    const BigInt f = c / dlead;
    quot.add_term(e, f);
    r -= dd.shifted(e) * LaurentPoly::constant(f);
  }
  if (!r.is_zero()) fail(ErrorCode::Invalid, "polynomial division is not exact");
  return quot.shifted(ps - ds);
}

}  // namespace skeinalt
