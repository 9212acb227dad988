#include "apolar/monomial.hpp"

#include "apolar/errors.hpp"

#include <algorithm>
#include <numeric>

namespace apolar {

Monomial::Monomial(std::vector<unsigned> exponents)
    : exps_(std::move(exponents)),
      degree_(std::accumulate(exps_.begin(), exps_.end(), 0u)) {}

Monomial Monomial::variable(int n, int i) {
  std::vector<unsigned> e(static_cast<std::size_t>(n + 1), 0);
  e.at(static_cast<std::size_t>(i)) = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::one(int n) {
  return Monomial(std::vector<unsigned>(static_cast<std::size_t>(n + 1), 0));
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<unsigned> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  std::vector<unsigned> e(other.exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= exps_[i];
  return Monomial(std::move(e));
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (degree_ != other.degree_) return degree_ <=> other.degree_;
  for (std::size_t i = exps_.size(); i-- > 0;) {
    if (exps_[i] != other.exps_[i]) return other.exps_[i] <=> exps_[i];
  }
  return std::strong_ordering::equal;
}

namespace {

void compositions(int vars_left, int remaining, std::vector<unsigned>& current,
                  std::vector<Monomial>& out) {
  if (vars_left == 1) {
    current.push_back(static_cast<unsigned>(remaining));
    out.emplace_back(current);
    current.pop_back();
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    current.push_back(static_cast<unsigned>(k));
    compositions(vars_left - 1, remaining - k, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomial_basis(int n, int e) {
  if (n < 0 || e < 0) throw DomainError("monomial_basis: n and e must be non-negative");
  std::vector<Monomial> out;
  std::vector<unsigned> current;
  compositions(n + 1, e, current, out);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::size_t basis_index(const std::vector<Monomial>& basis, const Monomial& m) {
  auto it = std::lower_bound(basis.begin(), basis.end(), m, std::greater<>());
  if (it == basis.end() || !(*it == m))
    throw DomainError("basis_index: monomial not in basis");
  return static_cast<std::size_t>(it - basis.begin());
}

}  // namespace apolar
