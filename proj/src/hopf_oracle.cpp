#include "fvect/hopf_oracle.hpp"

namespace fvect {

namespace {

constexpr i64 kProjectorGate = 4096;

// odometer over [0,p-1]^n tracking the character exponent of the monomial
template <typename Fn>
void for_each_monomial(i64 p, const std::vector<i64>& weight, i64 order, Fn&& fn) {
  i64 n = i64(weight.size());
  std::vector<i64> e(size_t(n), 0);
  i64 u = 0;
  while (true) {
    fn(u);
    i64 pos = 0;
    while (pos < n) {
      if (++e[size_t(pos)] < p) {
        u = (u + weight[size_t(pos)]) % order;
        break;
      }
      e[size_t(pos)] = 0;
      u = (u - weight[size_t(pos)] * (p - 1)) % order;
      if (u < 0) u += order;
      ++pos;
    }
    if (pos == n) break;
  }
}

std::vector<i64> generator_weights(const AdditiveHopfAlgebra& A) {
  std::vector<i64> w;
  for (i64 c : A.comp) w.push_back(char_twist(A.G, 1, c));
  return w;
}

// encoded values of -sum over the order-th roots of unity of lambda^c, by c;
// every projector diagonal entry is one of these sums
std::vector<i64> minus_root_sums(const FiniteField& k, i64 order) {
  auto gamma = k.decode(multiplicative_generator(k));
  auto zeta = k.pow(gamma, (k.q - 1) / order);
  std::vector<i64> out(size_t(order), 0);
  for (i64 c = 0; c < order; ++c) {
    auto zc = k.pow(zeta, c);
    auto acc = k.zero();
    auto cur = k.one();
    for (i64 a = 0; a < order; ++a) {
      acc = k.add(acc, cur);
      cur = k.mul(cur, zc);
    }
    out[size_t(c)] = k.encode(k.neg(acc));
  }
  return out;
}

FFMatrix projector_from_sums(const AdditiveHopfAlgebra& A,
                             const std::vector<i64>& us,
                             const std::vector<i64>& sums, i64 t, i64 size) {
  FFMatrix proj(size, size);
  for (i64 idx = 0; idx < size; ++idx)
    proj.at(idx, idx) =
        sums[size_t(A.G.normalize(us[size_t(idx)] - t))];
  return proj;
}

}  // namespace

std::vector<std::string> validate_hopf(const AdditiveHopfAlgebra& A) {
  std::vector<std::string> errors;
  if (A.r < 1 || A.s < 1 || A.s % A.r != 0) {
    errors.push_back("grading rank must divide the field degree");
    return errors;
  }
  if (A.k.p != A.p || A.k.s != A.s) errors.push_back("field does not match p^s");
  if (i64(A.comp.size()) != A.n) errors.push_back("one component index per generator required");
  for (i64 c : A.comp)
    if (c < 0 || c >= A.r) errors.push_back("component index out of range");
  if (A.a.rows != A.n || A.a.cols != A.n) errors.push_back("relation matrix must be n x n");
  if (!errors.empty()) return errors;
  for (i64 i = 0; i < A.n; ++i)
    for (i64 j = 0; j < A.n; ++j)
      if (A.a.at(i, j) != 0 && A.comp[size_t(j)] != (A.comp[size_t(i)] + 1) % A.r)
        errors.push_back("relation x_" + std::to_string(i) + "^p is not homogeneous");
  return errors;
}

AdditiveHopfAlgebra from_additive_module(const GradedModule& M) {
  ensure_valid(M);
  if (!sl_is_zero(M.V)) throw validation_error("presentation needs V = 0");
  AdditiveHopfAlgebra A;
  A.p = M.p;
  A.r = M.r;
  A.s = M.s;
  A.k = M.k;
  A.G = M.G;
  A.n = total_dim(M);
  std::vector<i64> offset(size_t(M.r) + 1, 0);
  for (i64 c = 0; c < M.r; ++c) {
    offset[size_t(c) + 1] = offset[size_t(c)] + M.dims[size_t(c)];
    for (i64 j = 0; j < M.dims[size_t(c)]; ++j) A.comp.push_back(c);
  }
  A.a = FFMatrix(A.n, A.n);
  for (i64 c = 0; c < M.r; ++c) {
    const auto& blk = M.F.blocks[size_t(c)];
    i64 dst = (c + 1) % M.r;
    for (i64 col = 0; col < blk.cols; ++col)
      for (i64 row = 0; row < blk.rows; ++row)
        A.a.at(offset[size_t(c)] + col, offset[size_t(dst)] + row) = blk.at(row, col);
  }
  return A;
}

CharSum isotypic_dims_monomial(const AdditiveHopfAlgebra& A) {
  auto errors = validate_hopf(A);
  if (!errors.empty()) throw validation_error(errors.front());
  checked_pow(A.p, A.n, i64(1) << 62);
  auto weights = generator_weights(A);
  std::vector<i64> counts(size_t(A.G.order), 0);
  for_each_monomial(A.p, weights, A.G.order, [&](i64 u) { ++counts[size_t(u)]; });
  std::vector<std::pair<i64, i64>> terms;
  for (i64 u = 0; u < A.G.order; ++u) terms.emplace_back(u, counts[size_t(u)]);
  return cs_make(A.G, terms);
}

FFMatrix character_projector(const AdditiveHopfAlgebra& A, i64 t) {
  auto errors = validate_hopf(A);
  if (!errors.empty()) throw validation_error(errors.front());
  i64 size = checked_pow(A.p, A.n, kProjectorGate);
  auto weights = generator_weights(A);
  // the exponent of every monomial, in basis order
  std::vector<i64> us;
  us.reserve(size_t(size));
  for_each_monomial(A.p, weights, A.G.order, [&](i64 u) { us.push_back(u); });
  auto sums = minus_root_sums(A.k, A.G.order);
  return projector_from_sums(A, us, sums, A.G.normalize(t), size);
}

CharSum isotypic_dims_projector(const AdditiveHopfAlgebra& A) {
  auto errors = validate_hopf(A);
  if (!errors.empty()) throw validation_error(errors.front());
  i64 size = checked_pow(A.p, A.n, kProjectorGate);
  auto weights = generator_weights(A);
  std::vector<i64> us;
  us.reserve(size_t(size));
  for_each_monomial(A.p, weights, A.G.order, [&](i64 u) { us.push_back(u); });
  auto sums = minus_root_sums(A.k, A.G.order);
  std::vector<std::pair<i64, i64>> terms;
  i64 total = 0;
  for (i64 t = 0; t < A.G.order; ++t) {
    i64 rank = ff_rank(A.k, projector_from_sums(A, us, sums, t, size));
    total += rank;
    terms.emplace_back(t, rank);
  }
  if (total != size) throw std::runtime_error("projector ranks do not partition the algebra");
  return cs_make(A.G, terms);
}

CharSum raynaud_monomial_dims(i64 r, i64 p) {
  auto G = char_group(p, r);
  std::vector<i64> weights;
  for (i64 i = 0; i < r; ++i) weights.push_back(char_twist(G, 1, i));
  std::vector<i64> counts(size_t(G.order), 0);
  for_each_monomial(p, weights, G.order, [&](i64 u) { ++counts[size_t(u)]; });
  std::vector<std::pair<i64, i64>> terms;
  for (i64 u = 0; u < G.order; ++u) terms.emplace_back(u, counts[size_t(u)]);
  return cs_make(G, terms);
}

}  // namespace fvect
