#include "unital/field.hpp"

#include <sstream>
#include <stdexcept>

namespace unital {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("not a prime power: " + std::to_string(q));
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t e = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) throw std::invalid_argument("not a prime power: " + std::to_string(q));
  return {static_cast<std::uint32_t>(p), e};
}

namespace {

// Multiply the element with digits `d` by x modulo the monic polynomial with
// low coefficients `c` (length e).
void times_x(std::vector<std::uint32_t>& d, const std::vector<std::uint32_t>& c,
             std::uint32_t p) {
  const std::size_t e = d.size();
  const std::uint32_t top = d[e - 1];
  for (std::size_t i = e - 1; i > 0; --i)
    d[i] = (d[i - 1] + p * p - (top * c[i]) % p) % p;
  d[0] = (p - (top * c[0]) % p) % p;
}

std::uint32_t encode(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

}  // namespace

Field Field::make(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic is not prime: " + std::to_string(p));
  if (e == 0) throw std::invalid_argument("field degree must be positive");
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    size *= p;
    if (size > kMaxSize)
      throw std::invalid_argument("field size exceeds 2^20");
  }

  Field f;
  f.p_ = p;
  f.e_ = e;
  f.size_ = static_cast<std::uint32_t>(size);
  const std::uint32_t order = f.size_ - 1;

  // Candidates enumerated with c_0 as the most significant key.
  std::vector<std::uint32_t> c(e);
  std::vector<std::uint32_t> digits(e);
  std::vector<Elem> powers;
  powers.reserve(order);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    std::uint64_t t = idx;
    for (std::uint32_t i = e; i-- > 0;) {
      c[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    if (c[0] == 0) continue;
    std::fill(digits.begin(), digits.end(), 0);
    digits[0] = 1;
    powers.clear();
    std::uint32_t steps = 0;
    bool primitive = false;
    while (steps < order) {
      powers.push_back(encode(digits, p));
      times_x(digits, c, p);
      ++steps;
      if (encode(digits, p) == 1) {
        primitive = steps == order;
        break;
      }
    }
    if (!primitive) continue;

    f.modulus_.assign(c.begin(), c.end());
    f.modulus_.push_back(1);
    f.exp_ = powers;
    f.log_.assign(size, 0);
    for (std::uint32_t k = 0; k < order; ++k) f.log_[f.exp_[k]] = k;
    if (p != 2 && size <= 256) {
      f.add_table_.resize(size * size);
      for (std::uint32_t a = 0; a < size; ++a) {
        auto da = f.coefficients(a);
        for (std::uint32_t b = 0; b < size; ++b) {
          auto db = f.coefficients(b);
          for (std::uint32_t i = 0; i < e; ++i) db[i] = (da[i] + db[i]) % p;
          f.add_table_[a * size + b] = encode(db, p);
        }
      }
    }
    return f;
  }
  throw std::logic_error("no primitive polynomial found");
}

Field Field::of_order(std::uint32_t q) {
  auto [p, e] = prime_power(q);
  return make(p, e);
}

Field::Elem Field::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (!add_table_.empty()) return add_table_[a * size_ + b];
  Elem r = 0;
  Elem scale = 1;
  while (a != 0 || b != 0) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

Field::Elem Field::neg(Elem a) const {
  if (p_ == 2) return a;
  Elem r = 0;
  Elem scale = 1;
  while (a != 0) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

Field::Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Field::Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  const std::uint32_t order = size_ - 1;
  return exp_[(order - log_[a]) % order];
}

Field::Elem Field::pow(Elem a, std::uint64_t n) const {
  if (n == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = size_ - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (n % order)) % order];
}

Field::Elem Field::frobenius(Elem a, std::uint32_t k) const {
  if (k >= e_) throw std::invalid_argument("frobenius exponent out of range");
  std::uint64_t pk = 1;
  for (std::uint32_t i = 0; i < k; ++i) pk *= p_;
  return pow(a, pk);
}

Field::Elem Field::rel_norm(Elem a, std::uint32_t d) const {
  if (d == 0 || e_ % d != 0)
    throw std::invalid_argument("subfield degree does not divide field degree");
  std::uint64_t pd = 1;
  for (std::uint32_t i = 0; i < d; ++i) pd *= p_;
  return pow(a, (size_ - 1) / (pd - 1));
}

bool Field::in_subfield(Elem a, std::uint32_t d) const {
  if (d == 0 || e_ % d != 0)
    throw std::invalid_argument("subfield degree does not divide field degree");
  if (d == e_) return true;
  return frobenius(a, d) == a;
}

std::vector<std::uint32_t> Field::coefficients(Elem a) const {
  std::vector<std::uint32_t> d(e_);
  for (std::uint32_t i = 0; i < e_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

Field::Elem Field::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != e_) throw std::invalid_argument("coefficient vector has wrong length");
  Elem v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw std::invalid_argument("coefficient out of range");
    v = v * p_ + coeffs[i];
  }
  return v;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << p_ << "^" << e_ << ") mod ";
  bool first = true;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    if (modulus_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (modulus_[i] != 1 || i == 0) os << modulus_[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

FieldElement::FieldElement(std::shared_ptr<const Field> field, Field::Elem rep)
    : field_(std::move(field)), rep_(rep) {
  if (rep_ >= field_->size()) throw std::invalid_argument("element out of range");
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!(*field_ == *o.field_)) throw std::invalid_argument("operands from different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->add(rep_, o.rep_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->sub(rep_, o.rep_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->mul(rep_, o.rep_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->div(rep_, o.rep_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(rep_)}; }
FieldElement FieldElement::inv() const { return {field_, field_->inv(rep_)}; }
FieldElement FieldElement::pow(std::uint64_t n) const { return {field_, field_->pow(rep_, n)}; }
FieldElement FieldElement::frobenius(std::uint32_t k) const {
  return {field_, field_->frobenius(rep_, k)};
}
FieldElement FieldElement::norm(std::uint32_t d) const { return {field_, field_->rel_norm(rep_, d)}; }

bool FieldElement::operator==(const FieldElement& o) const {
  return *field_ == *o.field_ && rep_ == o.rep_;
}

}  // namespace unital
