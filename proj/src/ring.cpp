#include "finring/ring.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace finring {

namespace {

// base^exponent, or nullopt when it exceeds cap.
std::optional<std::size_t> capped_power(std::size_t base, std::size_t exponent, std::size_t cap) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > cap / base) return std::nullopt;
    result *= base;
  }
  if (result > cap) return std::nullopt;
  return result;
}

void check_cap(std::optional<std::size_t> order, std::size_t cap, const std::string& what) {
  if (!order) {
    throw CapExceeded(what + ": order exceeds cap " + std::to_string(cap));
  }
}

// Mixed-radix digits, most significant first.
std::vector<Index> to_digits(std::size_t x, std::size_t radix, std::size_t width) {
  std::vector<Index> digits(width);
  for (std::size_t i = width; i-- > 0;) {
    digits[i] = Index(x % radix);
    x /= radix;
  }
  return digits;
}

Index from_digits(std::span<const Index> digits, std::size_t radix) {
  std::size_t x = 0;
  for (Index d : digits) x = x * radix + d;
  return Index(x);
}

std::string matrix_label(const FiniteRing& base, std::span<const Index> entries, unsigned k) {
  std::string s = "[";
  for (unsigned r = 0; r < k; ++r) {
    if (r) s += ',';
    s += '[';
    for (unsigned c = 0; c < k; ++c) {
      if (c) s += ',';
      s += base.label(entries[r * k + c]);
    }
    s += ']';
  }
  s += ']';
  return s;
}

}  // namespace

// FiniteRing -----------------------------------------------------------------

FiniteRing::FiniteRing(RingKind kind, Index order, std::vector<Index> add_table,
                       std::vector<Index> mul_table, Index zero, Index one,
                       std::vector<std::string> labels, std::string spec)
    : kind_(kind),
      order_(order),
      add_(std::move(add_table)),
      mul_(std::move(mul_table)),
      zero_(zero),
      one_(one),
      labels_(std::move(labels)),
      spec_(std::move(spec)) {
  const std::size_t cells = std::size_t(order) * order;
  if (order == 0 || add_.size() != cells || mul_.size() != cells || labels_.size() != order) {
    throw InvalidRing("ring tables have wrong dimensions");
  }
  if (zero_ >= order || one_ >= order) throw InvalidRing("zero or one out of range");
  for (Index v : add_)
    if (v >= order) throw InvalidRing("addition table entry out of range");
  for (Index v : mul_)
    if (v >= order) throw InvalidRing("multiplication table entry out of range");
  // Missing negatives are left at zero; validate_ring reports them.
  neg_.assign(order, zero_);
  for (Index x = 0; x < order; ++x) {
    for (Index y = 0; y < order; ++y) {
      if (add(x, y) == zero_) {
        neg_[x] = y;
        break;
      }
    }
  }
}

Index FiniteRing::pow(Index x, std::uint64_t n) const noexcept {
  Index result = one_;
  Index square = x;
  while (n) {
    if (n & 1U) result = mul(result, square);
    square = mul(square, square);
    n >>= 1U;
  }
  return result;
}

Element FiniteRing::element(Index x) const { return Element(*this, x); }

std::optional<Index> FiniteRing::corner_index(Index y) const {
  auto it = std::lower_bound(injection_.begin(), injection_.end(), y);
  if (it == injection_.end() || *it != y) return std::nullopt;
  return Index(it - injection_.begin());
}

// Element --------------------------------------------------------------------

Element::Element(const FiniteRing& ring, Index index) : ring_(&ring), index_(index) {
  if (index >= ring.order()) {
    throw std::out_of_range("element index " + std::to_string(index) + " outside ring of order " +
                            std::to_string(ring.order()));
  }
}

namespace {
const FiniteRing& common_ring(const Element& x, const Element& y) {
  if (&x.ring() != &y.ring()) throw RingMismatch("operands belong to different rings");
  return x.ring();
}
}  // namespace

Element operator+(const Element& x, const Element& y) {
  const auto& r = common_ring(x, y);
  return Element(r, r.add(x.index(), y.index()));
}

Element operator-(const Element& x, const Element& y) {
  const auto& r = common_ring(x, y);
  return Element(r, r.sub(x.index(), y.index()));
}

Element operator*(const Element& x, const Element& y) {
  const auto& r = common_ring(x, y);
  return Element(r, r.mul(x.index(), y.index()));
}

Element operator-(const Element& x) { return Element(x.ring(), x.ring().neg(x.index())); }

Element Element::pow(std::int64_t n) const {
  if (n < 0) throw std::invalid_argument("negative exponent");
  return Element(*ring_, ring_->pow(index_, std::uint64_t(n)));
}

// Builders -------------------------------------------------------------------

RingPtr build_zmod(Index n, std::size_t order_cap) {
  if (n == 0) throw std::invalid_argument("zmod: modulus must be positive");
  if (n > order_cap) {
    throw CapExceeded("zmod:" + std::to_string(n) + ": order exceeds cap " +
                      std::to_string(order_cap));
  }
  const std::size_t order = n;
  std::vector<Index> add(order * order), mul(order * order);
  std::vector<std::string> labels(order);
  for (std::size_t x = 0; x < order; ++x) {
    labels[x] = std::to_string(x);
    for (std::size_t y = 0; y < order; ++y) {
      add[x * order + y] = Index((x + y) % order);
      mul[x * order + y] = Index((x * y) % order);
    }
  }
  return std::make_shared<FiniteRing>(RingKind::zmod, n, std::move(add), std::move(mul), 0,
                                      Index(1 % n), std::move(labels),
                                      "zmod:" + std::to_string(n));
}

RingPtr build_matrix_ring(const RingPtr& base, unsigned k, std::size_t order_cap) {
  if (k == 0) throw std::invalid_argument("mat: dimension must be positive");
  const std::size_t q = base->order();
  const std::size_t width = std::size_t(k) * k;
  auto capped = capped_power(q, width, order_cap);
  check_cap(capped, order_cap, "mat:" + std::to_string(k) + ":" + base->spec());
  const std::size_t order = *capped;

  std::vector<std::vector<Index>> entries(order);
  for (std::size_t x = 0; x < order; ++x) entries[x] = to_digits(x, q, width);

  std::vector<Index> add(order * order), mul(order * order);
  std::vector<Index> scratch(width);
  for (std::size_t x = 0; x < order; ++x) {
    const auto& a = entries[x];
    for (std::size_t y = 0; y < order; ++y) {
      const auto& b = entries[y];
      for (std::size_t i = 0; i < width; ++i) scratch[i] = base->add(a[i], b[i]);
      add[x * order + y] = from_digits(scratch, q);
      for (unsigned r = 0; r < k; ++r) {
        for (unsigned c = 0; c < k; ++c) {
          Index acc = base->zero();
          for (unsigned t = 0; t < k; ++t) {
            acc = base->add(acc, base->mul(a[r * k + t], b[t * k + c]));
          }
          scratch[r * k + c] = acc;
        }
      }
      mul[x * order + y] = from_digits(scratch, q);
    }
  }

  std::vector<std::string> labels(order);
  for (std::size_t x = 0; x < order; ++x) labels[x] = matrix_label(*base, entries[x], k);

  std::vector<Index> identity(width, base->zero());
  for (unsigned i = 0; i < k; ++i) identity[i * k + i] = base->one();

  auto ring = std::make_shared<FiniteRing>(
      RingKind::matrix, Index(order), std::move(add), std::move(mul), 0, from_digits(identity, q),
      std::move(labels), "mat:" + std::to_string(k) + ":" + base->spec());
  ring->dim_ = k;
  ring->base_ = base;
  return ring;
}

RingPtr build_upper_triangular(const RingPtr& base, unsigned k, std::size_t order_cap) {
  if (k == 0) throw std::invalid_argument("tri: dimension must be positive");
  const std::size_t q = base->order();
  const std::size_t width = std::size_t(k) * (k + 1) / 2;
  auto capped = capped_power(q, width, order_cap);
  check_cap(capped, order_cap, "tri:" + std::to_string(k) + ":" + base->spec());
  const std::size_t order = *capped;

  // slot[r*k+c] is the digit position of entry (r,c), r <= c, row-major.
  std::vector<std::size_t> slot(std::size_t(k) * k, width);
  for (unsigned r = 0, s = 0; r < k; ++r)
    for (unsigned c = r; c < k; ++c) slot[r * k + c] = s++;

  auto full = [&](std::span<const Index> digits) {
    std::vector<Index> m(std::size_t(k) * k, base->zero());
    for (std::size_t i = 0; i < m.size(); ++i)
      if (slot[i] < width) m[i] = digits[slot[i]];
    return m;
  };

  std::vector<std::vector<Index>> entries(order);
  for (std::size_t x = 0; x < order; ++x) entries[x] = to_digits(x, q, width);

  std::vector<Index> add(order * order), mul(order * order);
  std::vector<Index> scratch(width);
  for (std::size_t x = 0; x < order; ++x) {
    const auto a = full(entries[x]);
    for (std::size_t y = 0; y < order; ++y) {
      const auto b = full(entries[y]);
      for (std::size_t i = 0; i < width; ++i) scratch[i] = base->add(entries[x][i], entries[y][i]);
      add[x * order + y] = from_digits(scratch, q);
      for (unsigned r = 0; r < k; ++r) {
        for (unsigned c = r; c < k; ++c) {
          Index acc = base->zero();
          for (unsigned t = r; t <= c; ++t) {
            acc = base->add(acc, base->mul(a[r * k + t], b[t * k + c]));
          }
          scratch[slot[r * k + c]] = acc;
        }
      }
      mul[x * order + y] = from_digits(scratch, q);
    }
  }

  std::vector<std::string> labels(order);
  for (std::size_t x = 0; x < order; ++x) labels[x] = matrix_label(*base, full(entries[x]), k);

  std::vector<Index> identity(width, base->zero());
  for (unsigned i = 0; i < k; ++i) identity[slot[i * k + i]] = base->one();

  auto ring = std::make_shared<FiniteRing>(
      RingKind::upper_triangular, Index(order), std::move(add), std::move(mul), 0,
      from_digits(identity, q), std::move(labels), "tri:" + std::to_string(k) + ":" + base->spec());
  ring->dim_ = k;
  ring->base_ = base;
  return ring;
}

RingPtr build_product(const RingPtr& r1, const RingPtr& r2, std::size_t order_cap) {
  const std::size_t n1 = r1->order(), n2 = r2->order();
  if (n1 * n2 > order_cap) {
    throw CapExceeded("prod:" + r1->spec() + "," + r2->spec() + ": order exceeds cap " +
                      std::to_string(order_cap));
  }
  const std::size_t order = n1 * n2;
  std::vector<Index> add(order * order), mul(order * order);
  std::vector<std::string> labels(order);
  for (std::size_t x = 0; x < order; ++x) {
    const Index x1 = Index(x / n2), x2 = Index(x % n2);
    labels[x] = "(" + r1->label(x1) + "," + r2->label(x2) + ")";
    for (std::size_t y = 0; y < order; ++y) {
      const Index y1 = Index(y / n2), y2 = Index(y % n2);
      add[x * order + y] = Index(r1->add(x1, y1) * n2 + r2->add(x2, y2));
      mul[x * order + y] = Index(r1->mul(x1, y1) * n2 + r2->mul(x2, y2));
    }
  }
  auto ring = std::make_shared<FiniteRing>(
      RingKind::product, Index(order), std::move(add), std::move(mul),
      Index(r1->zero() * n2 + r2->zero()), Index(r1->one() * n2 + r2->one()), std::move(labels),
      "prod:" + r1->spec() + "," + r2->spec());
  ring->base_ = r1;
  ring->second_ = r2;
  return ring;
}

RingPtr build_corner(const RingPtr& r, Index e) {
  if (e >= r->order()) throw std::out_of_range("corner: idempotent index out of range");
  if (r->mul(e, e) != e) {
    throw NotIdempotent("corner: " + r->label(e) + " is not idempotent in " + r->spec());
  }
  std::vector<Index> carrier;
  carrier.reserve(r->order());
  for (Index x = 0; x < r->order(); ++x) carrier.push_back(r->mul(r->mul(e, x), e));
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());

  const std::size_t order = carrier.size();
  std::vector<Index> position(r->order(), Index(order));
  for (std::size_t i = 0; i < order; ++i) position[carrier[i]] = Index(i);

  std::vector<Index> add(order * order), mul(order * order);
  std::vector<std::string> labels(order);
  for (std::size_t i = 0; i < order; ++i) {
    labels[i] = r->label(carrier[i]);
    for (std::size_t j = 0; j < order; ++j) {
      const Index s = position[r->add(carrier[i], carrier[j])];
      const Index p = position[r->mul(carrier[i], carrier[j])];
      if (s == order || p == order) throw InvalidRing("corner carrier is not closed");
      add[i * order + j] = s;
      mul[i * order + j] = p;
    }
  }
  auto ring = std::make_shared<FiniteRing>(RingKind::corner, Index(order), std::move(add),
                                           std::move(mul), position[r->zero()], position[e],
                                           std::move(labels),
                                           "corner:" + r->spec() + ":" + r->label(e));
  ring->base_ = r;
  ring->injection_ = std::move(carrier);
  if (auto report = validate_ring(*ring); !report.valid) {
    throw InvalidRing("corner ring fails axioms: " + report.failure);
  }
  return ring;
}

RingPtr build_table_ring(Index order, std::vector<Index> add, std::vector<Index> mul, Index one,
                         std::string spec, bool validate) {
  std::vector<std::string> labels(order);
  for (Index x = 0; x < order; ++x) labels[x] = std::to_string(x);
  auto ring = std::make_shared<FiniteRing>(RingKind::table, order, std::move(add), std::move(mul),
                                           0, one, std::move(labels), std::move(spec));
  if (validate) {
    if (auto report = validate_ring(*ring); !report.valid) {
      throw InvalidRing(ring->spec() + ": " + report.failure);
    }
  }
  return ring;
}

// Validation -----------------------------------------------------------------

ValidationReport validate_ring(const FiniteRing& r) {
  const Index n = r.order();
  const Index zero = r.zero(), one = r.one();
  auto fail = [](std::string what, std::vector<Index> witness) {
    return ValidationReport{false, std::move(what), std::move(witness)};
  };

  if (n > 1 && zero == one) return fail("zero equals one in a ring of order > 1", {zero});

  for (Index x = 0; x < n; ++x) {
    if (r.add(x, zero) != x || r.add(zero, x) != x) return fail("zero is not an additive identity", {x});
    if (r.mul(x, one) != x || r.mul(one, x) != x) return fail("one is not a multiplicative identity", {x});
    std::vector<bool> seen(n, false);
    for (Index y = 0; y < n; ++y) {
      const Index s = r.add(x, y);
      if (seen[s]) return fail("addition row is not a permutation", {x});
      seen[s] = true;
      if (s != r.add(y, x)) return fail("addition is not commutative", {x, y});
    }
  }
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      const Index xy_sum = r.add(x, y);
      const Index xy = r.mul(x, y);
      for (Index z = 0; z < n; ++z) {
        if (r.add(xy_sum, z) != r.add(x, r.add(y, z))) {
          return fail("addition is not associative", {x, y, z});
        }
        if (r.mul(xy, z) != r.mul(x, r.mul(y, z))) {
          return fail("multiplication is not associative", {x, y, z});
        }
        if (r.mul(x, r.add(y, z)) != r.add(xy, r.mul(x, z))) {
          return fail("left distributivity fails", {x, y, z});
        }
        if (r.mul(r.add(y, z), x) != r.add(r.mul(y, x), r.mul(z, x))) {
          return fail("right distributivity fails", {x, y, z});
        }
      }
    }
  }
  return {};
}

// Element grammar ------------------------------------------------------------

namespace {

struct Literal {
  char bracket = 0;  // 0 for a leaf, '[' or '('
  std::string leaf;
  std::vector<Literal> items;
};

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  Literal parse_all() {
    Literal lit = parse();
    skip_space();
    if (pos_ != text_.size()) error("trailing characters");
    return lit;
  }

 private:
  [[noreturn]] void error(const std::string& why) const {
    throw ParseError(ParseError::Kind::unparseable,
                     "cannot parse element '" + std::string(text_) + "': " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  Literal parse() {
    skip_space();
    if (pos_ >= text_.size()) error("unexpected end");
    const char open = text_[pos_];
    if (open == '[' || open == '(') {
      const char close = open == '[' ? ']' : ')';
      ++pos_;
      Literal lit;
      lit.bracket = open;
      while (true) {
        lit.items.push_back(parse());
        skip_space();
        if (pos_ >= text_.size()) error("unbalanced brackets");
        if (text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (text_[pos_] == close) {
          ++pos_;
          return lit;
        }
        error("unexpected '" + std::string(1, text_[pos_]) + "'");
      }
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_.find_first_of(",[]() \t", pos_) != pos_) ++pos_;
    if (pos_ == start) error("empty entry");
    return Literal{0, std::string(text_.substr(start, pos_ - start)), {}};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

[[noreturn]] void out_of_range(const FiniteRing& r, const std::string& why) {
  throw ParseError(ParseError::Kind::out_of_range, why + " in " + r.spec());
}

[[noreturn]] void shape_error(const FiniteRing& r, const std::string& why) {
  throw ParseError(ParseError::Kind::unparseable, why + " for " + r.spec());
}

Index interpret(const FiniteRing& r, const Literal& lit) {
  switch (r.kind()) {
    case RingKind::zmod:
    case RingKind::table: {
      if (lit.bracket) shape_error(r, "expected an integer literal");
      std::int64_t value = 0;
      const char* first = lit.leaf.data();
      const char* last = first + lit.leaf.size();
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec == std::errc::result_out_of_range) out_of_range(r, "literal " + lit.leaf + " too large");
      if (ec != std::errc() || ptr != last) shape_error(r, "'" + lit.leaf + "' is not an integer");
      if (value < 0 || value >= std::int64_t(r.order())) {
        out_of_range(r, "literal " + lit.leaf + " outside [0, " + std::to_string(r.order()) + ")");
      }
      return Index(value);
    }
    case RingKind::matrix:
    case RingKind::upper_triangular: {
      const unsigned k = r.dimension();
      const FiniteRing& base = *r.base();
      if (lit.bracket != '[' || lit.items.size() != k) {
        shape_error(r, "expected " + std::to_string(k) + " bracketed rows");
      }
      std::vector<Index> digits;
      for (unsigned row = 0; row < k; ++row) {
        const Literal& rl = lit.items[row];
        if (rl.bracket != '[' || rl.items.size() != k) {
          shape_error(r, "expected " + std::to_string(k) + " entries per row");
        }
        for (unsigned col = 0; col < k; ++col) {
          const Index entry = interpret(base, rl.items[col]);
          if (r.kind() == RingKind::upper_triangular && col < row) {
            if (entry != base.zero()) out_of_range(r, "matrix is not upper triangular");
          } else {
            digits.push_back(entry);
          }
        }
      }
      return from_digits(digits, base.order());
    }
    case RingKind::product: {
      if (lit.bracket != '(' || lit.items.size() != 2) shape_error(r, "expected a pair (x,y)");
      const Index x = interpret(*r.base(), lit.items[0]);
      const Index y = interpret(*r.second(), lit.items[1]);
      return Index(x * r.second()->order() + y);
    }
    case RingKind::corner: {
      const Index rep = interpret(*r.parent(), lit);
      auto idx = r.corner_index(rep);
      if (!idx) out_of_range(r, r.parent()->label(rep) + " is not in the corner");
      return *idx;
    }
  }
  shape_error(r, "unknown ring kind");
}

}  // namespace

Index parse_element(const FiniteRing& r, std::string_view text) {
  return interpret(r, LiteralParser(text).parse_all());
}

std::string format_element(const FiniteRing& r, Index x) { return r.label(x); }

}  // namespace finring
