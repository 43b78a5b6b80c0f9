#pragma once

// Exact arithmetic in GF(p) and GF(p^k), k <= 4.
//
// An element is stored as a single integer code: the coefficients
// c_0 + c_1 x + ... + c_{k-1} x^{k-1} of its residue modulo the field
// modulus, packed as c_0 + c_1 p + ... + c_{k-1} p^{k-1}. Codes are
// canonical, so equality and hashing are structural.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "triarr/error.hpp"

namespace triarr {

/// Low-degree-first coefficient list.
using Coefficients = std::vector<int>;

/// Univariate polynomial with integer coefficients, low-degree first.
using UnivariatePoly = std::vector<std::int64_t>;

inline constexpr int kMaxExtensionDegree = 4;

namespace detail {

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = mod(a, p);
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  return mod(t, p);
}

// Polynomials over Z/p, low-degree first, no trailing zeros (empty = 0).
using ModPoly = std::vector<std::int64_t>;

inline void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline ModPoly poly_rem(ModPoly f, const ModPoly& g, std::int64_t p) {
  trim(f);
  const std::int64_t lead_inv = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const std::int64_t factor = mod(f.back() * lead_inv, p);
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i)
      f[shift + i] = mod(f[shift + i] - factor * g[i], p);
    trim(f);
  }
  return f;
}

// True iff the monic polynomial f of degree k has no monic factor of
// degree 1..k/2 (exhaustive trial division).
inline bool is_irreducible(const ModPoly& f, std::int64_t p) {
  const int k = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= k / 2; ++d) {
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::int64_t idx = 0; idx < count; ++idx) {
      ModPoly g(d + 1);
      std::int64_t rest = idx;
      for (int i = 0; i < d; ++i) {
        g[i] = rest % p;
        rest /= p;
      }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

struct FieldData {
  std::int64_t p = 0;
  int k = 1;
  Coefficients modulus;  // k + 1 entries, monic
  std::uint32_t q = 0;
  std::vector<std::uint32_t> pow_p;  // p^i, i < k
  // Extension fields only: discrete log / antilog w.r.t. a primitive element.
  std::vector<std::uint32_t> exp_table;
  std::vector<std::uint32_t> log_table;
};

}  // namespace detail

class FieldElement;

/// Handle to an immutable finite field. Copies share the same tables.
class FieldSpec {
 public:
  FieldSpec() = default;

  bool valid() const noexcept { return static_cast<bool>(data_); }
  std::int64_t characteristic() const { return data_->p; }
  int degree() const { return data_->k; }
  const Coefficients& modulus() const { return data_->modulus; }
  std::uint32_t order() const { return data_->q; }
  bool is_prime_field() const { return data_->k == 1; }

  FieldElement zero() const;
  FieldElement one() const;
  /// Image of an integer under Z -> F.
  FieldElement element(std::int64_t n) const;
  FieldElement from_coefficients(const Coefficients& coeffs) const;
  FieldElement from_code(std::uint32_t code) const;

  /// "p" for prime fields, "p^k" otherwise.
  std::string notation() const {
    std::ostringstream os;
    os << data_->p;
    if (data_->k > 1) os << '^' << data_->k;
    return os.str();
  }

  // Raw arithmetic on canonical codes; no field checks.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (data_->k == 1) return static_cast<std::uint32_t>((std::int64_t{a} + b) % data_->p);
    std::uint32_t out = 0;
    for (int i = 0; i < data_->k; ++i) {
      const std::uint32_t pi = data_->pow_p[i];
      const std::uint32_t da = (a / pi) % data_->p;
      const std::uint32_t db = (b / pi) % data_->p;
      out += static_cast<std::uint32_t>((da + db) % data_->p) * pi;
    }
    return out;
  }

  std::uint32_t neg(std::uint32_t a) const {
    if (data_->k == 1) return a == 0 ? 0 : static_cast<std::uint32_t>(data_->p - a);
    std::uint32_t out = 0;
    for (int i = 0; i < data_->k; ++i) {
      const std::uint32_t pi = data_->pow_p[i];
      const std::uint32_t da = (a / pi) % data_->p;
      out += static_cast<std::uint32_t>((data_->p - da) % data_->p) * pi;
    }
    return out;
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (data_->k == 1)
      return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % data_->p);
    if (a == 0 || b == 0) return 0;
    const std::uint32_t e = data_->log_table[a] + data_->log_table[b];
    return data_->exp_table[e % (data_->q - 1)];
  }

  /// Inverse of a nonzero code.
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in GF(" + notation() + ")");
    if (data_->k == 1) return static_cast<std::uint32_t>(detail::inv_mod(a, data_->p));
    const std::uint32_t l = data_->log_table[a];
    return data_->exp_table[(data_->q - 1 - l) % (data_->q - 1)];
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t n) const {
    std::uint32_t result = 1, base = a;
    while (n > 0) {
      if (n & 1) result = mul(result, base);
      base = mul(base, base);
      n >>= 1;
    }
    return result;
  }

  Coefficients decode(std::uint32_t code) const {
    Coefficients c(data_->k);
    for (int i = 0; i < data_->k; ++i) {
      c[i] = static_cast<int>(code % data_->p);
      code /= static_cast<std::uint32_t>(data_->p);
    }
    return c;
  }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    if (a.data_ == b.data_) return true;
    if (!a.data_ || !b.data_) return false;
    return a.data_->p == b.data_->p && a.data_->k == b.data_->k &&
           a.data_->modulus == b.data_->modulus;
  }

  friend FieldSpec make_field(std::int64_t p, int k, std::optional<Coefficients> modulus);

 private:
  explicit FieldSpec(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::FieldData> data_;
};

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldSpec field, std::uint32_t code) : field_(std::move(field)), code_(code) {}

  const FieldSpec& field() const noexcept { return field_; }
  std::uint32_t code() const noexcept { return code_; }
  Coefficients coefficients() const { return field_.decode(code_); }
  bool is_zero() const noexcept { return code_ == 0; }
  bool is_one() const noexcept { return code_ == 1; }

  FieldElement operator+(const FieldElement& o) const { return {field_, field_.add(code_, checked(o))}; }
  FieldElement operator-(const FieldElement& o) const { return {field_, field_.sub(code_, checked(o))}; }
  FieldElement operator*(const FieldElement& o) const { return {field_, field_.mul(code_, checked(o))}; }
  FieldElement operator/(const FieldElement& o) const {
    const std::uint32_t c = checked(o);
    if (c == 0) throw Error(ErrorCode::DivisionByZero, "division by zero in GF(" + field_.notation() + ")");
    return {field_, field_.mul(code_, field_.inv(c))};
  }
  FieldElement operator-() const { return {field_, field_.neg(code_)}; }
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  FieldElement inv() const { return {field_, field_.inv(code_)}; }
  FieldElement pow(std::uint64_t n) const { return {field_, field_.pow(code_, n)}; }

  /// Prime fields print the residue; extension fields print the
  /// low-degree-first coefficient list, e.g. "[0,1]".
  std::string to_string() const {
    if (field_.is_prime_field()) return std::to_string(code_);
    std::string out = "[";
    const auto c = coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c[i]);
    }
    return out + "]";
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.code_ == b.code_ && a.field_ == b.field_;
  }
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
    return a.code_ <=> b.code_;
  }

 private:
  std::uint32_t checked(const FieldElement& o) const {
    if (!(field_ == o.field_))
      throw Error(ErrorCode::FieldMismatch, "operands from GF(" + field_.notation() + ") and GF(" +
                                                o.field_.notation() + ")");
    return o.code_;
  }

  FieldSpec field_;
  std::uint32_t code_ = 0;
};

inline FieldElement FieldSpec::zero() const { return {*this, 0}; }
inline FieldElement FieldSpec::one() const { return {*this, 1}; }
inline FieldElement FieldSpec::element(std::int64_t n) const {
  return {*this, static_cast<std::uint32_t>(detail::mod(n, data_->p))};
}
inline FieldElement FieldSpec::from_code(std::uint32_t code) const {
  if (code >= data_->q) throw Error(ErrorCode::InvalidArgument, "element code out of range");
  return {*this, code};
}
inline FieldElement FieldSpec::from_coefficients(const Coefficients& coeffs) const {
  if (static_cast<int>(coeffs.size()) > data_->k)
    throw Error(ErrorCode::DegreeMismatch, "element has more than " + std::to_string(data_->k) + " coefficients");
  std::uint32_t code = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    code += static_cast<std::uint32_t>(detail::mod(coeffs[i], data_->p)) * data_->pow_p[i];
  return {*this, code};
}

/// Smallest monic irreducible polynomial of degree k over GF(p), comparing
/// coefficient lists low-degree first.
inline Coefficients default_modulus(std::int64_t p, int k) {
  if (k == 1) return {0, 1};
  std::int64_t count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  // Enumerate so that c_0 varies slowest: that is low-degree-first lexicographic order.
  for (std::int64_t idx = 0; idx < count; ++idx) {
    detail::ModPoly f(k + 1);
    std::int64_t rest = idx;
    for (int i = k - 1; i >= 0; --i) {
      f[i] = rest % p;
      rest /= p;
    }
    f[k] = 1;
    if (f[0] == 0) continue;
    if (detail::is_irreducible(f, p)) return Coefficients(f.begin(), f.end());
  }
  throw Error(ErrorCode::ReducibleModulus, "no irreducible polynomial found");
}

/// Validated GF(p^k). With no modulus given, uses default_modulus(p, k).
inline FieldSpec make_field(std::int64_t p, int k = 1, std::optional<Coefficients> modulus = std::nullopt) {
  if (!detail::is_prime(p))
    throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  if (p > (std::int64_t{1} << 31))
    throw Error(ErrorCode::InvalidArgument, "characteristic too large");
  if (k < 1 || k > kMaxExtensionDegree)
    throw Error(ErrorCode::DegreeMismatch, "extension degree must be in 1.." + std::to_string(kMaxExtensionDegree));

  auto data = std::make_shared<detail::FieldData>();
  data->p = p;
  data->k = k;
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    data->pow_p.push_back(static_cast<std::uint32_t>(q));
    q *= static_cast<std::uint64_t>(p);
  }
  if (q > (k == 1 ? (std::uint64_t{1} << 31) : (std::uint64_t{1} << 16)))
    throw Error(ErrorCode::InvalidArgument, "field order too large");
  data->q = static_cast<std::uint32_t>(q);

  if (k == 1) {
    data->modulus = {0, 1};
    if (modulus && !(modulus->size() == 2 && detail::mod((*modulus)[1], p) == 1))
      throw Error(ErrorCode::DegreeMismatch, "prime field modulus must be x");
    return FieldSpec(std::move(data));
  }

  if (modulus) {
    if (static_cast<int>(modulus->size()) != k + 1)
      throw Error(ErrorCode::DegreeMismatch, "modulus must have k+1 = " + std::to_string(k + 1) + " coefficients");
    detail::ModPoly f;
    for (int c : *modulus) f.push_back(detail::mod(c, p));
    if (f.back() != 1) throw Error(ErrorCode::DegreeMismatch, "modulus must be monic of degree k");
    if (!detail::is_irreducible(f, p)) throw Error(ErrorCode::ReducibleModulus, "modulus is reducible");
    data->modulus = Coefficients(f.begin(), f.end());
  } else {
    data->modulus = default_modulus(p, k);
  }

  // Schoolbook product of codes reduced by the modulus; only used to build
  // the log tables.
  const auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
    std::vector<std::int64_t> prod(2 * k - 1, 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        prod[i + j] += ((a / data->pow_p[i]) % p) * ((b / data->pow_p[j]) % p);
    for (int d = 2 * k - 2; d >= k; --d) {
      const std::int64_t top = detail::mod(prod[d], p);
      for (int i = 0; i < k; ++i) prod[d - k + i] -= top * data->modulus[i];
      prod[d] = 0;
    }
    std::uint32_t out = 0;
    for (int i = 0; i < k; ++i) out += static_cast<std::uint32_t>(detail::mod(prod[i], p)) * data->pow_p[i];
    return out;
  };

  data->exp_table.assign(data->q - 1, 0);
  data->log_table.assign(data->q, 0);
  for (std::uint32_t g = 2; g < data->q; ++g) {
    std::uint32_t x = 1;
    std::uint32_t n = 0;
    std::vector<bool> seen(data->q, false);
    bool primitive = true;
    for (n = 0; n < data->q - 1; ++n) {
      if (seen[x]) {
        primitive = false;
        break;
      }
      seen[x] = true;
      data->exp_table[n] = x;
      data->log_table[x] = n;
      x = slow_mul(x, g);
    }
    if (primitive) break;
  }
  return FieldSpec(std::move(data));
}

/// GF(q) for a prime power q.
inline FieldSpec make_field_of_order(std::int64_t q, std::optional<Coefficients> modulus = std::nullopt) {
  if (q < 2) throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(q) + " is not a prime power");
  std::int64_t p = 2;
  while (q % p != 0) ++p;
  int k = 0;
  std::int64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(q) + " is not a prime power");
  return make_field(p, k, std::move(modulus));
}

/// Parses "p", "q" (a prime power) or "p^k".
inline FieldSpec parse_field(const std::string& text, std::optional<Coefficients> modulus = std::nullopt) {
  try {
    std::size_t used = 0;
    const auto caret = text.find('^');
    if (caret == std::string::npos) {
      const long long q = std::stoll(text, &used);
      if (used != text.size()) throw Error(ErrorCode::ParseError, "bad field '" + text + "'");
      return make_field_of_order(q, std::move(modulus));
    }
    const long long p = std::stoll(text.substr(0, caret), &used);
    if (used != caret) throw Error(ErrorCode::ParseError, "bad field '" + text + "'");
    const std::string rest = text.substr(caret + 1);
    const int k = std::stoi(rest, &used);
    if (used != rest.size()) throw Error(ErrorCode::ParseError, "bad field '" + text + "'");
    return make_field(p, k, std::move(modulus));
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "bad field '" + text + "'");
  }
}

/// All q elements in code order (lexicographic, highest-degree coefficient first).
inline std::vector<FieldElement> enumerate_elements(const FieldSpec& field) {
  std::vector<FieldElement> out;
  out.reserve(field.order());
  for (std::uint32_t c = 0; c < field.order(); ++c) out.emplace_back(field, c);
  return out;
}

inline FieldElement evaluate(const UnivariatePoly& poly, const FieldElement& x) {
  FieldElement acc = x.field().zero();
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + x.field().element(*it);
  return acc;
}

/// Roots of an integer polynomial in F, by evaluation at every element.
inline std::vector<FieldElement> roots_of(const UnivariatePoly& poly, const FieldSpec& field) {
  if (std::all_of(poly.begin(), poly.end(),
                  [&](std::int64_t c) { return detail::mod(c, field.characteristic()) == 0; }))
    throw Error(ErrorCode::ZeroPolynomial, "polynomial vanishes identically over GF(" + field.notation() + ")");
  std::vector<FieldElement> roots;
  for (const auto& x : enumerate_elements(field))
    if (evaluate(poly, x).is_zero()) roots.push_back(x);
  return roots;
}

inline std::vector<FieldElement> cube_roots_of_unity(const FieldSpec& field) {
  return roots_of({-1, 0, 0, 1}, field);
}

}  // namespace triarr
