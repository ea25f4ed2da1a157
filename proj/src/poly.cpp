#include "cayley/poly.hpp"

#include <cctype>
#include <stdexcept>

#include "cayley/error.hpp"

namespace cayley {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(std::size_t degree, const BigInt& c) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::one_plus_x_pow(std::size_t k) {
  std::vector<BigInt> v(k + 1);
  v[0] += 1;
  v[k] += 1;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void IntPoly::set_coeff(std::size_t k, const BigInt& c) {
  if (k >= coeffs_.size()) {
    if (c == 0) return;
    coeffs_.resize(k + 1);
  }
  coeffs_[k] = c;
  trim();
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& other) { return *this = *this * other; }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly operator-(IntPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

IntPoly IntPoly::scale(const BigInt& c) const {
  std::vector<BigInt> out = coeffs_;
  for (auto& v : out) v *= c;
  return IntPoly(std::move(out));
}

IntPoly IntPoly::pow(unsigned k) const {
  IntPoly result{1};
  IntPoly base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

BigInt IntPoly::eval(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPoly IntPoly::divide_exact(const BigInt& c) const {
  if (c <= 0) throw std::invalid_argument("divide_exact: divisor must be positive");
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!mpz_divisible_p(coeffs_[i].get_mpz_t(), c.get_mpz_t())) {
      throw InternalError("divide_exact: coefficient of x^" + std::to_string(i) + " (" +
                          coeffs_[i].get_str() + ") is not divisible by " + c.get_str());
    }
    mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), c.get_mpz_t());
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::without_constant() const {
  IntPoly out = *this;
  out.set_coeff(0, 0);
  return out;
}

bool IntPoly::all_nonnegative() const {
  for (const auto& c : coeffs_)
    if (c < 0) return false;
  return true;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (c < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += 'x';
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out;
}

std::vector<Term> parse_terms(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  std::vector<Term> terms;
  if (s == "0") return terms;

  std::size_t i = 0;
  auto bad = [&](const std::string& why) {
    return std::invalid_argument("malformed polynomial '" + std::string(text) + "': " + why);
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!terms.empty()) {
      throw bad("expected '+' or '-'");
    }
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    BigInt c = 1;
    const bool has_coeff = i > start;
    if (has_coeff) c = BigInt(s.substr(start, i - start));
    std::size_t degree = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      degree = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t ds = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == ds) throw bad("missing exponent");
        degree = std::stoul(s.substr(ds, i - ds));
      }
    } else if (!has_coeff) {
      throw bad("expected a term at position " + std::to_string(i));
    }
    terms.push_back({degree, c * sign});
  }
  return terms;
}

IntPoly IntPoly::parse(std::string_view text) {
  IntPoly p;
  for (const auto& t : parse_terms(text)) p += monomial(t.degree, t.coeff);
  return p;
}

BigInt eval_int(const IntPoly& p, const BigInt& t) { return p.eval(t); }

IntPoly divide_exact_by_int(const IntPoly& p, const BigInt& c) { return p.divide_exact(c); }

nlohmann::json to_json(const IntPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeffs()[k] == 0) continue;
    arr.push_back(nlohmann::json::array({k, p.coeffs()[k].get_str()}));
  }
  return arr;
}

IntPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  IntPoly p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_unsigned() || !term[1].is_string())
      throw std::invalid_argument("polynomial JSON terms must be [degree, \"coefficient\"]");
    p += IntPoly::monomial(term[0].get<std::size_t>(), BigInt(term[1].get<std::string>()));
  }
  return p;
}

}  // namespace cayley
