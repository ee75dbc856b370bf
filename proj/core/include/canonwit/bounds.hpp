#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace canonwit {

using BigNat = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultPrecisionBits = 65536;

// Arbitrary-precision natural number that saturates: once a value reaches
// 2^precision_bits it is kept only as the certified lower bound 2^bits
// (exact() == false). Every operation here is monotone, so a saturated
// operand yields a saturated result.
class BoundNumber {
 public:
  BoundNumber() = default;
  BoundNumber(std::uint64_t v, std::size_t precision_bits = kDefaultPrecisionBits);
  BoundNumber(BigNat v, std::size_t precision_bits);

  static BoundNumber saturated(std::size_t precision_bits);

  bool exact() const { return exact_; }
  // Exact value, or the lower bound 2^precision_bits when saturated.
  const BigNat& value() const { return value_; }
  std::size_t precision_bits() const { return bits_; }

  bool equals(std::uint64_t v) const { return exact_ && value_ == v; }
  bool at_least(std::uint64_t v) const { return !exact_ || value_ >= v; }

  // Decimal digits, or ">=2^N" when saturated.
  std::string to_string() const;

  // Ordering of the represented numbers; unordered when both are saturated.
  friend std::partial_ordering operator<=>(const BoundNumber& a, const BoundNumber& b);
  friend bool operator==(const BoundNumber& a, const BoundNumber& b) {
    return a.exact_ && b.exact_ && a.value_ == b.value_;
  }

  friend BoundNumber operator+(const BoundNumber& a, const BoundNumber& b);
  friend BoundNumber operator*(const BoundNumber& a, const BoundNumber& b);
  // Requires a >= 1 (saturated counts as large).
  BoundNumber minus_one() const;

  friend BoundNumber pow(const BoundNumber& base, const BoundNumber& exponent);
  friend BoundNumber binomial(const BoundNumber& n, const BoundNumber& k);
  friend BoundNumber max(const BoundNumber& a, const BoundNumber& b);

 private:
  void normalize();

  BigNat value_ = 0;
  bool exact_ = true;
  std::size_t bits_ = kDefaultPrecisionBits;
};

enum class BoundFlag : std::uint8_t {
  kDegenerateBaseCase = 1,
  kHeuristicF = 2,
  kRamseyUpperBound = 4,
  kExceedsPrecision = 8,
};

class BoundFlags {
 public:
  BoundFlags() = default;
  BoundFlags(BoundFlag f) : bits_(static_cast<std::uint8_t>(f)) {}

  bool has(BoundFlag f) const { return bits_ & static_cast<std::uint8_t>(f); }
  bool empty() const { return bits_ == 0; }
  BoundFlags& operator|=(BoundFlags o) {
    bits_ |= o.bits_;
    return *this;
  }
  friend BoundFlags operator|(BoundFlags a, BoundFlags b) { return a |= b; }
  BoundFlags without(BoundFlag f) const {
    BoundFlags r = *this;
    r.bits_ &= static_cast<std::uint8_t>(~static_cast<std::uint8_t>(f));
    return r;
  }
  friend bool operator==(BoundFlags, BoundFlags) = default;

  // "degenerate-base-case", "heuristic-f", "ramsey-upper-bound",
  // "exceeds-precision", in that order.
  std::vector<std::string> names() const;

 private:
  std::uint8_t bits_ = 0;
};

struct BoundValue {
  BoundNumber number;
  std::string provenance;  // e.g. "C(2,2)"
  // exceeds-precision is set exactly when number is saturated; the other
  // flags accumulate over the whole evaluation tree.
  BoundFlags flags;

  bool exact() const { return number.exact(); }
  std::string decimal() const { return number.to_string(); }
};

// Grid-minor threshold used by the treewidth bound. The built-in power law
// k -> constant * k^exponent is a placeholder and marks results heuristic-f.
struct GridMinorFunction {
  std::function<BoundNumber(const BoundNumber&)> apply;
  bool heuristic = false;
  std::string name;

  static GridMinorFunction power_law(std::uint64_t exponent = 10, std::uint64_t constant = 1);
  static GridMinorFunction identity();
};

struct BoundOptions {
  // Literal mode keeps the base case Y(s,q)=1 for s=1 or q=1 only; the
  // default additionally uses Y(2,q)=Y(s,2)=2.
  bool literal = false;
  std::size_t precision_bits = kDefaultPrecisionBits;
};

// Evaluates the explicit bound functions with exact integer arithmetic and
// memoization. Not thread-safe; use one calculator per thread.
class BoundCalculator {
 public:
  explicit BoundCalculator(BoundOptions options = {});

  const BoundOptions& options() const { return options_; }
  BoundNumber number(std::uint64_t v) const { return BoundNumber(v, options_.precision_bits); }

  // Least n such that any r-colouring of an n-set has m elements of one
  // colour: r(m-1)+1.
  BoundValue pigeonhole_P(const BoundNumber& r, const BoundNumber& m) const;
  // Upper bound on the r-colour Ramsey number for pairs with monochromatic
  // m-sets, via binomial(a+b-2, a-1) and R_r(m) <= R_2(m, R_{r-1}(m)).
  BoundValue ramsey_upper_R(std::uint64_t colours, const BoundNumber& m) const;
  // r = P(p^q, q), C(p,q) = P(p^r, q).
  BoundValue lemma_grid_C(const BoundNumber& p, const BoundNumber& q) const;
  BoundValue thm_main2_Y(const BoundNumber& s, const BoundNumber& q);
  // Y(s, 2 R_2(max(t,q))), with Z = 1 when s = 1 or t = 1.
  BoundValue thm_main_Z(const BoundNumber& s, const BoundNumber& t, const BoundNumber& q);
  // b = 2(q-1)s^q + 2sq + 4.
  BoundValue lemma_dense_b(const BoundNumber& s, const BoundNumber& q) const;
  // c = R_2(max(b, 2q)).
  BoundValue lemma_dense_c(const BoundNumber& s, const BoundNumber& q) const;
  // D = Z(l c^2, 2q, q).
  BoundValue lemma_dense_D(const BoundNumber& s, const BoundNumber& q, const BoundNumber& ell);
  // X = f(D(s, q, s+5) + 2).
  BoundValue thm_prefinal_X(const BoundNumber& s, const BoundNumber& q,
                            const GridMinorFunction& f = GridMinorFunction::power_law());

 private:
  BoundValue evaluate_Y(const BoundNumber& s, const BoundNumber& q);
  BoundValue evaluate_literal_Y(const BoundNumber& s, const BoundNumber& q);

  BoundOptions options_;
  std::map<std::pair<BigNat, BigNat>, BoundValue> y_memo_;
};

// Function names accepted by evaluate_named: P R C Y Z b D X (and c).
struct NamedBoundRequest {
  std::string function;
  std::vector<std::uint64_t> args;
  bool literal = false;
  std::uint64_t f_exponent = 10;
};

// Dispatches a request by name with arity checking (MalformedInput on
// mismatch). R takes (colours, m).
BoundValue evaluate_named(const NamedBoundRequest& request,
                          std::size_t precision_bits = kDefaultPrecisionBits);

}  // namespace canonwit
