#include "canonwit/bounds.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "canonwit/error.hpp"

namespace canonwit {

namespace {

bool saturates(const BigNat& v, std::size_t bits) {
  return v > 0 && boost::multiprecision::msb(v) >= bits;
}

std::string args_string(std::initializer_list<const BoundNumber*> args) {
  std::string out = "(";
  bool first = true;
  for (const BoundNumber* a : args) {
    if (!first) out += ",";
    first = false;
    out += a->to_string();
  }
  return out + ")";
}

void require_positive(const BoundNumber& x, const char* what) {
  if (!x.at_least(1)) throw MalformedInput(std::string(what) + " must be at least 1");
}

BoundValue finish(BoundNumber n, std::string provenance, BoundFlags flags) {
  flags = flags.without(BoundFlag::kExceedsPrecision);
  if (!n.exact()) flags |= BoundFlag::kExceedsPrecision;
  return BoundValue{std::move(n), std::move(provenance), flags};
}

}  // namespace

BoundNumber::BoundNumber(std::uint64_t v, std::size_t precision_bits)
    : value_(v), bits_(precision_bits) {
  normalize();
}

BoundNumber::BoundNumber(BigNat v, std::size_t precision_bits)
    : value_(std::move(v)), bits_(precision_bits) {
  normalize();
}

BoundNumber BoundNumber::saturated(std::size_t precision_bits) {
  BoundNumber n;
  n.bits_ = precision_bits;
  n.exact_ = false;
  n.value_ = BigNat(1) << precision_bits;
  return n;
}

void BoundNumber::normalize() {
  if (exact_ && saturates(value_, bits_)) *this = saturated(bits_);
}

std::string BoundNumber::to_string() const {
  if (!exact_) return ">=2^" + std::to_string(bits_);
  return value_.str();
}

std::partial_ordering operator<=>(const BoundNumber& a, const BoundNumber& b) {
  if (a.exact_ && b.exact_) {
    if (a.value_ == b.value_) return std::partial_ordering::equivalent;
    return a.value_ < b.value_ ? std::partial_ordering::less : std::partial_ordering::greater;
  }
  if (a.exact_) return std::partial_ordering::less;
  if (b.exact_) return std::partial_ordering::greater;
  return std::partial_ordering::unordered;
}

BoundNumber operator+(const BoundNumber& a, const BoundNumber& b) {
  std::size_t bits = std::max(a.bits_, b.bits_);
  if (!a.exact_ || !b.exact_) return BoundNumber::saturated(bits);
  return BoundNumber(a.value_ + b.value_, bits);
}

BoundNumber operator*(const BoundNumber& a, const BoundNumber& b) {
  std::size_t bits = std::max(a.bits_, b.bits_);
  if (a.equals(0) || b.equals(0)) return BoundNumber(0, bits);
  if (!a.exact_ || !b.exact_) return BoundNumber::saturated(bits);
  return BoundNumber(a.value_ * b.value_, bits);
}

// A saturated value stays saturated; every caller only uses the result in
// ways where 2^bits - 1 and 2^bits behave alike.
BoundNumber BoundNumber::minus_one() const {
  if (!exact_) return *this;
  if (value_ == 0) throw MalformedInput("cannot decrement zero");
  return BoundNumber(value_ - 1, bits_);
}

BoundNumber pow(const BoundNumber& base, const BoundNumber& exponent) {
  std::size_t bits = std::max(base.bits_, exponent.bits_);
  if (exponent.equals(0)) return BoundNumber(1, bits);
  if (base.equals(0)) return BoundNumber(0, bits);
  if (base.equals(1)) return BoundNumber(1, bits);
  if (!base.exact_ || !exponent.exact_) return BoundNumber::saturated(bits);
  // base >= 2, so base^e >= 2^(msb(base) * e).
  BigNat lower = BigNat(boost::multiprecision::msb(base.value_)) * exponent.value_;
  if (lower >= bits) return BoundNumber::saturated(bits);
  unsigned e = exponent.value_.convert_to<unsigned>();
  return BoundNumber(boost::multiprecision::pow(base.value_, e), bits);
}

BoundNumber binomial(const BoundNumber& n, const BoundNumber& k) {
  std::size_t bits = std::max(n.bits_, k.bits_);
  if (k.equals(0)) return BoundNumber(1, bits);
  if (!n.exact_) return BoundNumber::saturated(bits);  // C(n,k) >= n for 1 <= k < n
  if (!k.exact_ || k.value_ > n.value_) return BoundNumber(0, bits);
  BigNat rest = n.value_ - k.value_;
  BigNat kk = k.value_ < rest ? k.value_ : rest;
  BigNat result = 1;
  for (BigNat i = 0; i < kk; ++i) {
    result = result * (n.value_ - i) / (i + 1);
    if (saturates(result, bits)) return BoundNumber::saturated(bits);
  }
  return BoundNumber(result, bits);
}

BoundNumber max(const BoundNumber& a, const BoundNumber& b) {
  if (!a.exact_) return a;
  if (!b.exact_) return b;
  return a.value_ >= b.value_ ? a : b;
}

std::vector<std::string> BoundFlags::names() const {
  std::vector<std::string> out;
  if (has(BoundFlag::kDegenerateBaseCase)) out.emplace_back("degenerate-base-case");
  if (has(BoundFlag::kHeuristicF)) out.emplace_back("heuristic-f");
  if (has(BoundFlag::kRamseyUpperBound)) out.emplace_back("ramsey-upper-bound");
  if (has(BoundFlag::kExceedsPrecision)) out.emplace_back("exceeds-precision");
  return out;
}

GridMinorFunction GridMinorFunction::power_law(std::uint64_t exponent, std::uint64_t constant) {
  GridMinorFunction f;
  f.heuristic = true;
  f.name = (constant == 1 ? "" : std::to_string(constant) + "*") + "k^" + std::to_string(exponent);
  f.apply = [exponent, constant](const BoundNumber& k) {
    BoundNumber e(exponent, k.precision_bits());
    return BoundNumber(constant, k.precision_bits()) * pow(k, e);
  };
  return f;
}

GridMinorFunction GridMinorFunction::identity() {
  GridMinorFunction f;
  f.name = "k";
  f.apply = [](const BoundNumber& k) { return k; };
  return f;
}

BoundCalculator::BoundCalculator(BoundOptions options) : options_(options) {}

BoundValue BoundCalculator::pigeonhole_P(const BoundNumber& r, const BoundNumber& m) const {
  require_positive(r, "P: number of colours");
  require_positive(m, "P: target size");
  return finish(r * m.minus_one() + number(1), "P" + args_string({&r, &m}), {});
}

BoundValue BoundCalculator::ramsey_upper_R(std::uint64_t colours, const BoundNumber& m) const {
  if (colours == 0) throw MalformedInput("R: number of colours must be at least 1");
  require_positive(m, "R: clique size");
  std::string prov = "R(" + std::to_string(colours) + "," + m.to_string() + ")";
  if (colours == 1) return finish(m, prov, BoundFlag::kRamseyUpperBound);
  // R_2(a, b) <= binomial(a+b-2, a-1), applied with a = m and b = R_{r-1}(m).
  BoundNumber previous = m;
  for (std::uint64_t r = 2; r <= colours; ++r) {
    BoundNumber top = (m + previous).minus_one().minus_one();
    previous = binomial(top, m.minus_one());
  }
  return finish(previous, prov, BoundFlag::kRamseyUpperBound);
}

BoundValue BoundCalculator::lemma_grid_C(const BoundNumber& p, const BoundNumber& q) const {
  require_positive(p, "C: p");
  require_positive(q, "C: q");
  BoundValue r = pigeonhole_P(pow(p, q), q);
  BoundValue c = pigeonhole_P(pow(p, r.number), q);
  return finish(c.number, "C" + args_string({&p, &q}), r.flags | c.flags);
}

BoundValue BoundCalculator::thm_main2_Y(const BoundNumber& s, const BoundNumber& q) {
  require_positive(s, "Y: s");
  require_positive(q, "Y: q");
  return options_.literal ? evaluate_literal_Y(s, q) : evaluate_Y(s, q);
}

BoundValue BoundCalculator::evaluate_Y(const BoundNumber& s, const BoundNumber& q) {
  std::string prov = "Y" + args_string({&s, &q});
  if (s.equals(1) || q.equals(1)) return finish(number(1), prov, {});
  if (s.equals(2) || q.equals(2)) return finish(number(2), prov, BoundFlag::kDegenerateBaseCase);

  // From here s, q >= 3 and each step multiplies by k >= Y(2, .) = 2, so
  // Y(s,q) >= 2^(q-1).
  const std::size_t bits = options_.precision_bits;
  if (!q.exact() || q.value() - 1 >= bits) {
    return finish(BoundNumber::saturated(bits), prov, BoundFlag::kDegenerateBaseCase);
  }
  std::optional<std::pair<BigNat, BigNat>> key;
  if (s.exact()) {
    key.emplace(s.value(), q.value());
    if (auto it = y_memo_.find(*key); it != y_memo_.end()) return it->second;
  }

  BoundNumber t = number(2);
  BoundFlags flags = BoundFlag::kDegenerateBaseCase;
  BoundNumber s_minus = s.minus_one();
  for (BigNat qq = 3; qq <= q.value() && t.exact(); ++qq) {
    BoundNumber qn(qq, bits);
    BoundValue c = lemma_grid_C(t, qn);
    BoundValue k = evaluate_Y(s_minus, c.number);
    flags |= c.flags | k.flags;
    t = k.number * t;
  }
  BoundValue result = finish(t, prov, flags);
  if (key) y_memo_.emplace(*key, result);
  return result;
}

BoundValue BoundCalculator::evaluate_literal_Y(const BoundNumber& s, const BoundNumber& q) {
  std::string prov = "Y" + args_string({&s, &q}) + " literal";
  if (s.equals(1) || q.equals(1)) return finish(number(1), prov, {});

  constexpr std::uint64_t kTableLimit = 4'000'000;
  bool small = s.exact() && q.exact() && s.value() * q.value() <= kTableLimit;
  if (!small) {
    // Every value of the literal recursion is 1 by induction on (s, q).
    return finish(number(1), prov + " (identically 1)", BoundFlag::kDegenerateBaseCase);
  }

  // Row-by-row unrolling of Y(s,q) = Y(s-1, C(Y(s,q-1), q)) * Y(s,q-1).
  const auto S = s.value().convert_to<std::size_t>();
  const auto Q = q.value().convert_to<std::size_t>();
  std::vector<BoundNumber> prev(Q + 1, number(1)), row(Q + 1, number(1));
  BoundFlags flags;
  for (std::size_t si = 2; si <= S; ++si) {
    for (std::size_t qi = 2; qi <= Q; ++qi) {
      const BoundNumber& t = row[qi - 1];
      BoundValue c = lemma_grid_C(t, number(qi));
      flags |= c.flags;
      if (!c.number.exact() || c.number.value() > Q) {
        // Cannot happen while every entry is 1, since then C(1, q) = q.
        throw Error(ErrorKind::kResourceLimit, "literal Y recursion left the table");
      }
      const BoundNumber& k = prev[c.number.value().convert_to<std::size_t>()];
      row[qi] = k * t;
    }
    prev = row;
  }
  return finish(prev[Q], prov, flags | BoundFlag::kDegenerateBaseCase);
}

BoundValue BoundCalculator::thm_main_Z(const BoundNumber& s, const BoundNumber& t,
                                       const BoundNumber& q) {
  require_positive(s, "Z: s");
  require_positive(t, "Z: t");
  require_positive(q, "Z: q");
  std::string prov = "Z" + args_string({&s, &t, &q});
  if (s.equals(1) || t.equals(1)) return finish(number(1), prov, {});
  BoundValue r = ramsey_upper_R(2, max(t, q));
  BoundValue y = thm_main2_Y(s, number(2) * r.number);
  return finish(y.number, prov + " = " + y.provenance, r.flags | y.flags);
}

BoundValue BoundCalculator::lemma_dense_b(const BoundNumber& s, const BoundNumber& q) const {
  require_positive(s, "b: s");
  require_positive(q, "b: q");
  BoundNumber two = number(2);
  BoundNumber v = two * q.minus_one() * pow(s, q) + two * s * q + number(4);
  return finish(v, "b" + args_string({&s, &q}), {});
}

BoundValue BoundCalculator::lemma_dense_c(const BoundNumber& s, const BoundNumber& q) const {
  BoundValue b = lemma_dense_b(s, q);
  BoundValue r = ramsey_upper_R(2, max(b.number, number(2) * q));
  return finish(r.number, "c" + args_string({&s, &q}), b.flags | r.flags);
}

BoundValue BoundCalculator::lemma_dense_D(const BoundNumber& s, const BoundNumber& q,
                                          const BoundNumber& ell) {
  require_positive(ell, "D: ell");
  BoundValue c = lemma_dense_c(s, q);
  BoundValue z = thm_main_Z(ell * c.number * c.number, number(2) * q, q);
  return finish(z.number, "D" + args_string({&s, &q, &ell}), c.flags | z.flags);
}

BoundValue BoundCalculator::thm_prefinal_X(const BoundNumber& s, const BoundNumber& q,
                                           const GridMinorFunction& f) {
  BoundValue d = lemma_dense_D(s, q, s + number(5));
  BoundNumber v = f.apply(d.number + number(2));
  BoundFlags flags = d.flags;
  if (f.heuristic) flags |= BoundFlag::kHeuristicF;
  return finish(v, "X" + args_string({&s, &q}) + " with f(k)=" + f.name, flags);
}

BoundValue evaluate_named(const NamedBoundRequest& request, std::size_t precision_bits) {
  static const std::map<std::string, std::size_t> kArity = {
      {"P", 2}, {"R", 2}, {"C", 2}, {"Y", 2}, {"Z", 3},
      {"b", 2}, {"c", 2}, {"D", 3}, {"X", 2}};
  auto it = kArity.find(request.function);
  if (it == kArity.end()) throw MalformedInput("unknown bound function '" + request.function + "'");
  if (request.args.size() != it->second) {
    std::ostringstream msg;
    msg << request.function << " takes " << it->second << " arguments, got "
        << request.args.size();
    throw MalformedInput(msg.str());
  }
  for (std::uint64_t a : request.args) {
    if (a == 0) throw MalformedInput(request.function + ": arguments must be at least 1");
  }

  BoundCalculator calc(BoundOptions{request.literal, precision_bits});
  auto arg = [&](std::size_t i) { return calc.number(request.args[i]); };
  const std::string& fn = request.function;
  if (fn == "P") return calc.pigeonhole_P(arg(0), arg(1));
  if (fn == "R") return calc.ramsey_upper_R(request.args[0], arg(1));
  if (fn == "C") return calc.lemma_grid_C(arg(0), arg(1));
  if (fn == "Y") return calc.thm_main2_Y(arg(0), arg(1));
  if (fn == "Z") return calc.thm_main_Z(arg(0), arg(1), arg(2));
  if (fn == "b") return calc.lemma_dense_b(arg(0), arg(1));
  if (fn == "c") return calc.lemma_dense_c(arg(0), arg(1));
  if (fn == "D") return calc.lemma_dense_D(arg(0), arg(1), arg(2));
  return calc.thm_prefinal_X(arg(0), arg(1), GridMinorFunction::power_law(request.f_exponent));
}

}  // namespace canonwit
