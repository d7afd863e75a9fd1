#include "pawn/cyclotomic.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace pawn {

namespace {

class CyclotomicCache {
 public:
  const QPoly& get(unsigned d) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = index_.find(d); it != index_.end()) return *it->second;
    }
    // Computed outside the lock; concurrent duplicates are harmless since
    // the first insert wins.
    QPoly value = QPoly::q_power_minus_one(d);
    for (unsigned e = 1; e < d; ++e)
      if (d % e == 0) value = exact_div(value, get(e));
    std::unique_lock lock(mutex_);
    if (auto it = index_.find(d); it != index_.end()) return *it->second;
    storage_.push_back(std::move(value));
    index_.emplace(d, &storage_.back());
    return storage_.back();
  }

 private:
  std::shared_mutex mutex_;
  std::deque<QPoly> storage_;
  std::unordered_map<unsigned, const QPoly*> index_;
};

CyclotomicCache& cache() {
  static CyclotomicCache c;
  return c;
}

}  // namespace

const QPoly& cyclotomic(unsigned d) {
  if (d == 0) throw std::invalid_argument("cyclotomic index must be positive");
  return cache().get(d);
}

QPoly CyclotomicFactorization::expand() const {
  QPoly p = remainder * unit;
  for (const auto& [d, m] : factors) p *= pow(cyclotomic(d), m);
  return p;
}

CyclotomicFactorization factor_cyclotomic(const QPoly& p, std::optional<unsigned> bound) {
  if (p.is_zero()) throw std::invalid_argument("factor_cyclotomic: zero polynomial");
  const unsigned limit = bound.value_or(2u * static_cast<unsigned>(p.degree()) + 2u);
  CyclotomicFactorization out;
  QPoly rest = p;
  for (unsigned d = 1; d <= limit && rest.degree() > 0; ++d) {
    const QPoly& phi = cyclotomic(d);
    if (phi.degree() > rest.degree()) continue;
    unsigned m = 0;
    for (;;) {
      auto [quo, rem] = divmod(rest, phi);
      if (!rem.is_zero()) break;
      rest = std::move(quo);
      ++m;
    }
    if (m > 0) out.factors.emplace(d, m);
  }
  out.unit = rest.content();
  out.remainder = rest.primitive_part();
  return out;
}

std::string cyclotomic_product_tex(const std::map<unsigned, unsigned>& factors) {
  if (factors.empty()) return "1";
  std::ostringstream out;
  for (const auto& [d, m] : factors) {
    out << "\\Phi_{" << d << "}";
    if (m > 1) out << "^{" << m << "}";
  }
  return out.str();
}

}  // namespace pawn
