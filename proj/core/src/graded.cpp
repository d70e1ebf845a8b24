#include "hrf/graded.hpp"

#include <algorithm>
#include <set>

namespace hrf {

GradedOperator GradedOperator::identity(const Dimensions& dims) {
  Weight zero;
  BlockMap blocks;
  for (const auto& [mu, d] : dims) {
    zero = Weight(std::vector<long>(mu.rank(), 0));
    blocks.emplace(mu, Matrix::identity(d));
  }
  return GradedOperator(zero, std::move(blocks));
}

GradedOperator GradedOperator::diagonal(const Dimensions& dims, const std::map<Weight, Rational>& scalars) {
  GradedOperator op = identity(dims);
  for (auto& [mu, blk] : op.blocks_) {
    auto it = scalars.find(mu);
    blk = blk * (it == scalars.end() ? Rational(0) : it->second);
  }
  return op;
}

const Matrix* GradedOperator::block(const Weight& src) const {
  auto it = blocks_.find(src);
  return it == blocks_.end() ? nullptr : &it->second;
}

GradedOperator GradedOperator::compose(const GradedOperator& other, const Ring& ring) const {
  GradedOperator out(degree_ + other.degree_);
  for (const auto& [src, b] : other.blocks_) {
    const Matrix* a = block(src + other.degree_);
    if (a == nullptr) continue;
    out.blocks_.emplace(src, multiply(*a, b, ring));
  }
  return out;
}

GradedOperator GradedOperator::plus(const GradedOperator& other, const Ring& ring) const {
  if (other.degree_ != degree_) throw std::invalid_argument("sum of operators of different degrees");
  GradedOperator out(*this);
  for (const auto& [src, b] : other.blocks_) {
    auto it = out.blocks_.find(src);
    if (it == out.blocks_.end()) {
      out.blocks_.emplace(src, b);
    } else {
      it->second = (it->second + b).normalized(ring);
    }
  }
  return out;
}

GradedOperator GradedOperator::scaled(const Rational& s, const Ring& ring) const {
  GradedOperator out(*this);
  for (auto& [src, b] : out.blocks_) b = (b * s).normalized(ring);
  return out;
}

bool GradedOperator::is_zero() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

GradedVector GradedOperator::apply(const GradedVector& v, const Ring& ring) const {
  GradedVector out;
  for (const auto& [mu, x] : v) {
    const Matrix* b = block(mu);
    if (b == nullptr) continue;
    auto y = b->operator*(std::span<const Rational>(x));
    for (auto& c : y) c = ring.normalize(c);
    auto& acc = out[mu + degree_];
    if (acc.empty()) {
      acc = std::move(y);
    } else {
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = ring.add(acc[i], y[i]);
    }
  }
  return out;
}

GradedModule::GradedModule(RootSystem rs, Ring ring, Dimensions dims, std::vector<BlockMap> lowering)
    : rs_(std::move(rs)), ring_(ring), dims_(std::move(dims)), lowering_(std::move(lowering)) {
  if (lowering_.empty()) lowering_.resize(rs_.rank());
  if (lowering_.size() != rs_.rank()) throw GradedModuleError("one lowering operator per simple root required");
  for (const auto& [mu, d] : dims_) {
    if (mu.rank() != rs_.rank()) throw GradedModuleError("weight " + mu.to_string() + " has wrong rank");
    if (d == 0) throw GradedModuleError("weight " + mu.to_string() + " has dimension 0");
  }
  for (std::size_t a = 0; a < lowering_.size(); ++a) {
    for (auto& [mu, blk] : lowering_[a]) {
      const Weight target = mu - rs_.simple_root(a);
      if (!in_support(mu) || !in_support(target)) {
        throw GradedModuleError("F_" + std::to_string(a + 1) + " block at " + mu.to_string() +
                                " connects weights outside the support");
      }
      if (blk.rows() != dim(target) || blk.cols() != dim(mu)) {
        throw GradedModuleError("F_" + std::to_string(a + 1) + " block at " + mu.to_string() +
                                " has shape " + std::to_string(blk.rows()) + "x" + std::to_string(blk.cols()));
      }
      blk = blk.normalized(ring_);
    }
  }
}

std::size_t GradedModule::dim(const Weight& mu) const {
  auto it = dims_.find(mu);
  return it == dims_.end() ? 0 : it->second;
}

std::size_t GradedModule::total_dim() const {
  std::size_t n = 0;
  for (const auto& [mu, d] : dims_) n += d;
  return n;
}

std::vector<Weight> GradedModule::support() const {
  std::vector<Weight> s;
  for (const auto& [mu, d] : dims_) s.push_back(mu);
  return s;
}

const Matrix* GradedModule::lowering_block(std::size_t alpha, const Weight& mu) const {
  const auto& blocks = lowering_.at(alpha);
  auto it = blocks.find(mu);
  return it == blocks.end() ? nullptr : &it->second;
}

Matrix GradedModule::lowering_or_zero(std::size_t alpha, const Weight& mu) const {
  if (const Matrix* b = lowering_block(alpha, mu)) return *b;
  return Matrix(dim(mu - rs_.simple_root(alpha)), dim(mu));
}

GradedOperator GradedModule::lowering(std::size_t alpha) const {
  return GradedOperator(-rs_.simple_root(alpha), lowering_.at(alpha));
}

long GradedModule::string_bound(std::size_t alpha) const {
  const Weight& a = rs_.simple_root(alpha);
  long best = 0;
  for (const auto& [mu, d] : dims_) {
    // Walk the contiguous part of the alpha-string below mu that lies in the support.
    long n = 0;
    Weight w = mu - a;
    while (in_support(w)) {
      ++n;
      w = w - a;
    }
    best = std::max(best, n);
  }
  return best;
}

const Matrix* BlockForm::block(const Weight& mu) const {
  auto it = gram.find(mu);
  return it == gram.end() ? nullptr : &it->second;
}

BlockForm BlockForm::scaled(const Rational& s, const Ring& ring) const {
  BlockForm out;
  for (const auto& [mu, g] : gram) out.gram.emplace(mu, (g * s).normalized(ring));
  return out;
}

std::size_t Subspace::dim(const Weight& mu) const {
  auto it = basis.find(mu);
  return it == basis.end() ? 0 : it->second.cols();
}

std::size_t Subspace::total_dim() const {
  std::size_t n = 0;
  for (const auto& [mu, b] : basis) n += b.cols();
  return n;
}

Dimensions Subspace::dims() const {
  Dimensions d;
  for (const auto& [mu, b] : basis)
    if (b.cols() > 0) d.emplace(mu, b.cols());
  return d;
}

GradedVector apply_op(const GradedModule& m, std::size_t alpha, const GradedVector& v) {
  for (const auto& [mu, x] : v) {
    if (x.size() != m.dim(mu)) {
      throw GradedModuleError("vector component at " + mu.to_string() + " has wrong dimension");
    }
  }
  GradedVector out = m.lowering(alpha).apply(v, m.ring());
  std::erase_if(out, [&](const auto& kv) { return !m.in_support(kv.first); });
  return out;
}

Subspace f_closure(const GradedModule& m, const std::map<Weight, Matrix>& seed_columns) {
  const RootSystem& rs = m.root_system();
  const Ring& ring = m.ring();
  // Every F_alpha lowers the height by one, so processing weights by decreasing
  // height sees all contributions to a weight before that weight is finalized.
  using Key = std::pair<Rational, Weight>;
  std::map<Key, Matrix, std::greater<>> pending;
  auto add = [&](const Weight& mu, const Matrix& cols) {
    if (cols.cols() == 0 || !m.in_support(mu)) return;
    Key k{rs.height(mu), mu};
    auto it = pending.find(k);
    if (it == pending.end()) {
      pending.emplace(k, cols);
    } else {
      it->second = it->second.hconcat(cols);
    }
  };
  for (const auto& [mu, cols] : seed_columns) {
    if (cols.cols() > 0 && cols.rows() != m.dim(mu)) {
      throw GradedModuleError("seed at " + mu.to_string() + " has wrong dimension");
    }
    add(mu, cols);
  }
  Subspace out;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Weight& mu = node.key().second;
    Matrix basis = column_basis(node.mapped(), ring);
    if (basis.cols() == 0) continue;
    for (std::size_t a = 0; a < rs.rank(); ++a) {
      if (const Matrix* f = m.lowering_block(a, mu)) add(mu - rs.simple_root(a), multiply(*f, basis, ring));
    }
    out.basis.emplace(mu, std::move(basis));
  }
  return out;
}

Subspace f_closure(const GradedModule& m, const std::vector<GradedVector>& seed) {
  std::map<Weight, std::vector<std::vector<Rational>>> cols;
  for (const auto& v : seed) {
    for (const auto& [mu, x] : v) {
      if (x.size() != m.dim(mu)) throw GradedModuleError("seed vector at " + mu.to_string() + " has wrong dimension");
      cols[mu].push_back(x);
    }
  }
  std::map<Weight, Matrix> seeds;
  for (auto& [mu, c] : cols) seeds.emplace(mu, Matrix::from_columns(c, m.dim(mu)));
  return f_closure(m, seeds);
}

Subspace submodule_MI(const GradedModule& m, const UpSet& set) {
  std::map<Weight, Matrix> seeds;
  for (const auto& [mu, d] : m.dims()) {
    if (set.contains(m.root_system(), mu)) seeds.emplace(mu, Matrix::identity(d));
  }
  return f_closure(m, seeds);
}

std::pair<GradedModule, RaisingOperators> contravariant_dual(const GradedModule& m,
                                                             const RaisingOperators& raising) {
  const RootSystem& rs = m.root_system();
  if (raising.size() != rs.rank()) throw GradedModuleError("one raising operator per simple root required");
  std::vector<BlockMap> lowering(rs.rank());
  RaisingOperators dual_raising(rs.rank());
  for (std::size_t a = 0; a < rs.rank(); ++a) {
    const Weight& alpha = rs.simple_root(a);
    for (const auto& [src, e] : raising[a]) {
      // E_a[src] : M_src -> M_{src+alpha}; its transpose lowers (dM)_{src+alpha} -> (dM)_src.
      lowering[a].emplace(src + alpha, e.transpose());
    }
    for (const auto& [src, f] : m.lowering_blocks(a)) {
      dual_raising[a].emplace(src - alpha, f.transpose());
    }
  }
  return {GradedModule(rs, m.ring(), m.dims(), std::move(lowering)), std::move(dual_raising)};
}

Dimensions character(const GradedModule& m) { return m.dims(); }

}  // namespace hrf
