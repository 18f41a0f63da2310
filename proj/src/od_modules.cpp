#include "fvect/od_modules.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "fvect/raynaud.hpp"

namespace fvect {

namespace {

i64 wrap(i64 a, i64 n) { return ((a % n) + n) % n; }

GRMatrix gr_block_diag(const GaloisRing& R, const GRMatrix& a,
                       const GRMatrix& b) {
  GRMatrix out(R, a.rows + b.rows, a.cols + b.cols);
  for (i64 i = 0; i < a.rows; ++i)
    for (i64 j = 0; j < a.cols; ++j) out.at(i, j) = a.at(i, j);
  for (i64 i = 0; i < b.rows; ++i)
    for (i64 j = 0; j < b.cols; ++j)
      out.at(a.rows + i, a.cols + j) = b.at(i, j);
  return out;
}

// p * identity as a graded map, the right-hand side of FV, VF and Pi^d.
GRGradedMap p_identity(const GaloisRing& R, const std::vector<i64>& dims) {
  GRGradedMap out;
  for (i64 n : dims)
    out.blocks.push_back(GRMatrix::scalar(R, n, R.from_int(R.p)));
  return out;
}

ODParams resolved(const ODParams& params) {
  ODParams q = params;
  if (q.twist_shift < 0) q.twist_shift = q.f;
  return q;
}

bool elt_in_range(const GaloisRing& R, const GaloisRing::Elt& a) {
  if (i64(a.size()) != R.s) return false;
  for (i64 c : a)
    if (c < 0 || c >= R.pm) return false;
  return true;
}

}  // namespace

GRGradedMap gr_map_compose(const GaloisRing& R, const GRGradedMap& a,
                           const GRGradedMap& b) {
  i64 r = i64(b.blocks.size());
  GRGradedMap out;
  out.twist = wrap(a.twist + b.twist, R.s);
  out.shift = wrap(a.shift + b.shift, r);
  for (i64 i = 0; i < r; ++i)
    out.blocks.push_back(
        gr_mat_mul(R, a.blocks[size_t(wrap(i + b.shift, r))],
                   gr_mat_frob(R, b.blocks[size_t(i)], a.twist)));
  return out;
}

ODModule make_od_module(const ODParams& params, i64 m, i64 s,
                        const std::vector<i64>& dims,
                        const std::vector<GRMatrix>& f_blocks,
                        const std::vector<GRMatrix>& v_blocks,
                        const std::vector<GRMatrix>& pi_blocks) {
  ODModule M;
  M.params = resolved(params);
  M.r = M.params.f * M.params.d;
  M.s = s;
  M.m = m;
  M.R = gr_make(M.params.p, m, s);
  M.G = char_group(M.params.p, M.r);
  M.dims = dims;
  M.F = {1, 1, f_blocks};
  M.V = {-1, -1, v_blocks};
  M.Pi = {0, M.params.twist_shift, pi_blocks};
  return M;
}

std::vector<std::string> validate_od(const ODModule& M) {
  std::vector<std::string> errs;
  const ODParams& pa = M.params;
  if (!is_prime(pa.p)) errs.push_back("p must be prime");
  if (pa.f < 1) errs.push_back("residue degree must be >= 1");
  if (pa.d < 2) errs.push_back("division algebra index must be >= 2");
  if (M.m < 2) errs.push_back("witt length must be >= 2");
  if (!errs.empty()) return errs;

  if (M.r != pa.f * pa.d) errs.push_back("grading rank must equal f*d");
  if (M.s % std::max<i64>(M.r, 1) != 0 || M.s < 1)
    errs.push_back("grading rank must divide the ring degree");
  if (!errs.empty()) return errs;
  GaloisRing R = gr_make(pa.p, M.m, M.s);
  if (!M.R.same_ring(R) || M.R.m != M.m)
    errs.push_back("ring does not match the parameters");
  if (M.G.p != pa.p || M.G.r != M.r)
    errs.push_back("character group does not match the parameters");
  if (i64(M.dims.size()) != M.r) {
    errs.push_back("dimension vector has wrong length");
    return errs;
  }
  i64 total = 0;
  for (i64 n : M.dims) {
    if (n < 0) errs.push_back("negative component dimension");
    total += n;
  }
  i64 unit_rank = pa.f * pa.d * pa.d;
  if (total <= 0 || total % unit_rank != 0)
    errs.push_back("total rank is not a positive multiple of f*d^2");

  if (M.F.twist != 1 || M.F.shift != 1)
    errs.push_back("F must have twist +1 and shift +1");
  if (M.V.twist != -1 || M.V.shift != -1)
    errs.push_back("V must have twist -1 and shift -1");
  if (M.Pi.twist != 0 || wrap(M.Pi.shift, M.r) != wrap(pa.twist_shift, M.r))
    errs.push_back("Pi must have twist 0 and the configured shift");
  if (i64(M.F.blocks.size()) != M.r || i64(M.V.blocks.size()) != M.r ||
      i64(M.Pi.blocks.size()) != M.r) {
    errs.push_back("block lists must have one block per component");
    return errs;
  }
  for (i64 i = 0; i < M.r && errs.empty(); ++i) {
    const GRMatrix& fb = M.F.blocks[size_t(i)];
    const GRMatrix& vb = M.V.blocks[size_t(i)];
    const GRMatrix& pb = M.Pi.blocks[size_t(i)];
    if (fb.rows != M.dims[size_t(wrap(i + 1, M.r))] || fb.cols != M.dims[size_t(i)])
      errs.push_back("F block " + std::to_string(i) + " has the wrong shape");
    if (vb.rows != M.dims[size_t(wrap(i - 1, M.r))] || vb.cols != M.dims[size_t(i)])
      errs.push_back("V block " + std::to_string(i) + " has the wrong shape");
    if (pb.rows != M.dims[size_t(wrap(i + pa.twist_shift, M.r))] ||
        pb.cols != M.dims[size_t(i)])
      errs.push_back("Pi block " + std::to_string(i) + " has the wrong shape");
    for (const GRMatrix* b : {&fb, &vb, &pb})
      for (const auto& e : b->e)
        if (!elt_in_range(M.R, e)) {
          errs.push_back("block entry out of ring range");
          break;
        }
  }
  if (!errs.empty()) return errs;

  GRGradedMap pid = p_identity(M.R, M.dims);
  if (gr_map_compose(M.R, M.F, M.V) != pid) errs.push_back("FV differs from p");
  if (gr_map_compose(M.R, M.V, M.F) != pid) errs.push_back("VF differs from p");
  GRGradedMap pw = M.Pi;
  for (i64 t = 1; t < pa.d; ++t) pw = gr_map_compose(M.R, pw, M.Pi);
  if (pw != pid) errs.push_back("Pi^d differs from p");
  if (gr_map_compose(M.R, M.Pi, M.F) != gr_map_compose(M.R, M.F, M.Pi))
    errs.push_back("Pi does not commute with F");
  if (gr_map_compose(M.R, M.Pi, M.V) != gr_map_compose(M.R, M.V, M.Pi))
    errs.push_back("Pi does not commute with V");
  return errs;
}

void ensure_valid_od(const ODModule& M) {
  auto errs = validate_od(M);
  if (errs.empty()) return;
  std::string msg;
  for (const auto& e : errs) {
    if (!msg.empty()) msg += "; ";
    msg += e;
  }
  throw validation_error(msg);
}

i64 od_total_rank(const ODModule& M) {
  i64 total = 0;
  for (i64 n : M.dims) total += n;
  return total;
}

i64 od_height(const ODModule& M) {
  return od_total_rank(M) / (M.params.f * M.params.d * M.params.d);
}

CharSum torsion_char(const ODModule& M, i64 j) {
  ensure_valid_od(M);
  if (j < 1 || j > M.params.d)
    throw validation_error("torsion index out of range");
  GRGradedMap pw = M.Pi;
  for (i64 t = 1; t < j; ++t) pw = gr_map_compose(M.R, pw, M.Pi);

  std::vector<std::pair<i64, i64>> terms;
  for (i64 src = 0; src < M.r; ++src) {
    i64 dst = wrap(src + pw.shift, M.r);
    const GRMatrix& b = pw.blocks[size_t(src)];
    if (b.rows > b.cols)
      throw validation_error("torsion cokernel is not killed by p");
    DiagonalForm D = diagonal_reduce(M.R, b);
    i64 dim = 0;
    for (i64 e : D.exponents) {
      if (e > 1) throw validation_error("torsion cokernel is not killed by p");
      if (e == 1) ++dim;
    }
    if (dim > 0) terms.push_back({char_twist(M.G, 1, dst), dim});
  }
  return cs_make(M.G, terms);
}

CharSum lie_char(const ODModule& M) {
  ensure_valid_od(M);
  std::vector<std::pair<i64, i64>> terms;
  for (i64 c = 0; c < M.r; ++c) {
    FFMatrix v = gr_mat_mod_p(M.R, M.V.blocks[size_t(wrap(c + 1, M.r))]);
    i64 dim = M.dims[size_t(c)] - ff_rank(M.R.kbar, v);
    if (dim > 0) terms.push_back({char_twist(M.G, 1, c), dim});
  }
  return cs_make(M.G, terms);
}

CharSum omega_char(const ODModule& M) {
  ensure_valid_od(M);
  std::vector<std::pair<i64, i64>> terms;
  for (i64 c = 0; c < M.r; ++c)
    if (M.dims[size_t(c)] > 0)
      terms.push_back({char_twist(M.G, 1, c), M.dims[size_t(c)]});
  return cs_sub(cs_make(M.G, terms), lie_char(M));
}

bool divcar_check(const ODModule& M) {
  CharSum t = torsion_char(M, M.params.d);
  i64 hd = od_height(M) * M.params.d;
  std::vector<std::pair<i64, i64>> terms;
  for (i64 c = 0; c < M.r; ++c) terms.push_back({char_twist(M.G, 1, c), hd});
  return t == cs_make(M.G, terms);
}

bool lemma_identity_check(const ODModule& M) {
  CharSum t1 = torsion_char(M, 1);
  CharSum lie = lie_char(M);
  i64 ts = M.params.twist_shift;
  CharSum lhs = cs_sub(cs_twist(t1, ts + 1), cs_twist(t1, ts));
  CharSum rhs = cs_sub(lie, cs_twist(lie, ts));
  return lhs == rhs;
}

std::pair<bool, bool> theorem_check(const ODModule& M) {
  bool direct = is_raynaud_from_crystal(torsion_char(M, 1));
  CharSum lie = lie_char(M);
  bool criterion =
      od_height(M) == 1 && lie == cs_twist(lie, M.params.twist_shift);
  return {direct, criterion};
}

bool is_strict(const ODModule& M) {
  CharSum lie = lie_char(M);
  std::set<i64> linear;
  for (i64 c = 0; c < M.r; c += M.params.f)
    linear.insert(char_twist(M.G, 1, c));
  for (const auto& [e, coeff] : lie.coeffs)
    if (!linear.count(e)) return false;
  return true;
}

bool is_special_formal(const ODModule& M) {
  if (!is_strict(M) || od_height(M) != 1) return false;
  CharSum lie = lie_char(M);
  for (i64 c = 0; c < M.r; c += M.params.f)
    if (cs_coeff(lie, char_twist(M.G, 1, c)) != 1) return false;
  return true;
}

ODModule make_special_drinfeld(i64 p) {
  ODParams params{p, 1, 2, 1};
  GaloisRing R = gr_make(p, 2, 2);
  GRMatrix b(R, 2, 2);
  b.at(0, 1) = R.from_int(p);
  b.at(1, 0) = R.one();
  std::vector<GRMatrix> blocks{b, b};
  ODModule M = make_od_module(params, 2, 2, {2, 2}, blocks, blocks, blocks);
  ensure_valid_od(M);
  return M;
}

namespace {

// One height-one building block: monomial maps on basis vectors e_{i,j},
// i the component, j in Z_d, with
//   F e_{i,j}  = p^eps(i,j)       e_{i+1,j}
//   V e_{i,j}  = p^(1-eps(i-1,j)) e_{i-1,j}
//   Pi e_{i,j} = p^eta(i,j)       e_{i+f,j+1}
// FV = VF = p holds for any eps; Pi^d = p and both commutation identities
// hold exactly when every Pi-orbit of eta sums to 1 and
//   eta(i+1,j) = eta(i,j) + eps(i+f,j+1) - eps(i,j).
// The Lie coefficient at component c is #{ j : eps(c,j) = 0 }.
struct MonoBlock {
  std::vector<i64> eps, eta;  // flat r*d, index i*d + j
};

// eta is constant-plus-prefix along each column j; the base constants are
// pinned by the Pi-orbit sums, which force every eta value into {0,1} and
// leave at most two feasible constants per column.
std::optional<std::vector<i64>> solve_eta(i64 r, i64 d, i64 f,
                                          const std::vector<i64>& eps) {
  auto at = [d](i64 i, i64 j) { return size_t(i * d + j); };
  std::vector<std::vector<i64>> pre;
  pre.resize(size_t(d));
  std::vector<i64> lo(size_t(d), 0), hi(size_t(d), 0);
  for (i64 j = 0; j < d; ++j) {
    std::vector<i64>& pr = pre[size_t(j)];
    pr.assign(size_t(r), 0);
    i64 cur = 0;
    for (i64 i = 0; i < r; ++i) {
      pr[size_t(i)] = cur;
      cur += eps[at(wrap(i + f, r), wrap(j + 1, d))] - eps[at(i, j)];
    }
    if (cur != 0) return std::nullopt;  // inconsistent around the cycle
    i64 mn = *std::min_element(pr.begin(), pr.end());
    i64 mx = *std::max_element(pr.begin(), pr.end());
    lo[size_t(j)] = -mn;
    hi[size_t(j)] = 1 - mx;
    if (lo[size_t(j)] > hi[size_t(j)]) return std::nullopt;
  }

  std::vector<i64> b = lo;
  while (true) {
    std::vector<i64> eta(size_t(r * d), 0);
    for (i64 j = 0; j < d; ++j)
      for (i64 i = 0; i < r; ++i)
        eta[at(i, j)] = b[size_t(j)] + pre[size_t(j)][size_t(i)];
    bool ok = true;
    for (i64 i = 0; i < r && ok; ++i) {
      i64 sum = 0;
      for (i64 t = 0; t < d; ++t) sum += eta[at(wrap(i + t * f, r), t)];
      ok = (sum == 1);
    }
    if (ok) return eta;
    i64 pos = d - 1;
    while (pos >= 0 && ++b[size_t(pos)] > hi[size_t(pos)]) {
      b[size_t(pos)] = lo[size_t(pos)];
      --pos;
    }
    if (pos < 0) return std::nullopt;
  }
}

// Search eps with the prescribed per-component zero counts, first match in
// lexicographic order of the per-component zero sets.
std::optional<MonoBlock> solve_block(i64 r, i64 d, i64 f,
                                     const std::vector<i64>& target) {
  for (i64 v : target)
    if (v < 0 || v > d) return std::nullopt;

  // per component: the sorted set of j with eps = 0
  std::vector<std::vector<i64>> zero;
  zero.resize(size_t(r));
  for (i64 c = 0; c < r; ++c) {
    zero[size_t(c)].resize(size_t(target[size_t(c)]));
    for (i64 t = 0; t < target[size_t(c)]; ++t) zero[size_t(c)][size_t(t)] = t;
  }
  auto next_combination = [d](std::vector<i64>& comb) {
    i64 k = i64(comb.size());
    i64 i = k - 1;
    while (i >= 0 && comb[size_t(i)] == d - k + i) --i;
    if (i < 0) return false;
    ++comb[size_t(i)];
    for (i64 t = i + 1; t < k; ++t) comb[size_t(t)] = comb[size_t(t - 1)] + 1;
    return true;
  };

  while (true) {
    std::vector<i64> eps(size_t(r * d), 1);
    for (i64 c = 0; c < r; ++c)
      for (i64 j : zero[size_t(c)]) eps[size_t(c * d + j)] = 0;
    if (auto eta = solve_eta(r, d, f, eps))
      return MonoBlock{std::move(eps), std::move(*eta)};
    i64 c = r - 1;
    while (c >= 0 && !next_combination(zero[size_t(c)])) {
      i64 k = target[size_t(c)];
      for (i64 t = 0; t < k; ++t) zero[size_t(c)][size_t(t)] = t;
      --c;
    }
    if (c < 0) return std::nullopt;
  }
}

using BlockMemo = std::map<std::vector<i64>, std::optional<MonoBlock>>;

const std::optional<MonoBlock>& solve_block_memo(i64 r, i64 d, i64 f,
                                                 const std::vector<i64>& v,
                                                 BlockMemo& memo) {
  auto it = memo.find(v);
  if (it == memo.end()) it = memo.emplace(v, solve_block(r, d, f, v)).first;
  return it->second;
}

// Split the target across h blocks, depth first, lexicographically.
bool split_target(i64 r, i64 d, i64 f, i64 h, const std::vector<i64>& remaining,
                  i64 b, std::vector<MonoBlock>& out, BlockMemo& memo) {
  if (b == h - 1) {
    const auto& sol = solve_block_memo(r, d, f, remaining, memo);
    if (!sol) return false;
    out.push_back(*sol);
    return true;
  }
  i64 tail = (h - 1 - b) * d;
  std::vector<i64> v(size_t(r), 0);
  for (i64 c = 0; c < r; ++c)
    v[size_t(c)] = std::max<i64>(0, remaining[size_t(c)] - tail);
  while (true) {
    const auto& sol = solve_block_memo(r, d, f, v, memo);
    if (sol) {
      std::vector<i64> rest(size_t(r), 0);
      for (i64 c = 0; c < r; ++c)
        rest[size_t(c)] = remaining[size_t(c)] - v[size_t(c)];
      out.push_back(*sol);
      if (split_target(r, d, f, h, rest, b + 1, out, memo)) return true;
      out.pop_back();
    }
    i64 c = r - 1;
    while (c >= 0) {
      i64 cap = std::min<i64>(d, remaining[size_t(c)]);
      if (++v[size_t(c)] <= cap) break;
      v[size_t(c)] = std::max<i64>(0, remaining[size_t(c)] - tail);
      --c;
    }
    if (c < 0) return false;
  }
}

GRMatrix random_gr_invertible(const GaloisRing& R, i64 n,
                              std::mt19937_64& rng) {
  while (true) {
    GRMatrix u(R, n, n);
    for (auto& e : u.e)
      for (i64 c = 0; c < R.s; ++c) e[size_t(c)] = i64(rng() % u64(R.pm));
    if (ff_rank(R.kbar, gr_mat_mod_p(R, u)) == n) return u;
  }
}

}  // namespace

ODModule random_od(u64 seed, const ODGenConfig& cfg) {
  if (!is_prime(cfg.p)) throw validation_error("p must be prime");
  if (cfg.f < 1) throw validation_error("residue degree must be >= 1");
  if (cfg.d < 2) throw validation_error("division algebra index must be >= 2");
  if (cfg.m < 2) throw validation_error("witt length must be >= 2");
  if (cfg.h < 1) throw validation_error("height factor must be >= 1");
  i64 r = cfg.f * cfg.d;
  i64 s = cfg.s == 0 ? r : cfg.s;
  if (s % r != 0) throw validation_error("grading rank must divide the ring degree");

  std::vector<i64> target;
  if (cfg.target_lie) {
    target = *cfg.target_lie;
    if (i64(target.size()) != r)
      throw validation_error("target lie has wrong length");
    for (i64 v : target)
      if (v < 0 || v > cfg.h * cfg.d)
        throw validation_error("target lie coefficient out of range");
  } else {
    target.assign(size_t(r), 0);
    for (i64 c = 0; c < r; c += cfg.f) target[size_t(c)] = cfg.h;
  }

  BlockMemo memo;
  std::vector<MonoBlock> blocks;
  if (!split_target(r, cfg.d, cfg.f, cfg.h, target, 0, blocks, memo))
    throw validation_error("target lie character is not realizable");

  GaloisRing R = gr_make(cfg.p, cfg.m, s);
  i64 n = cfg.h * cfg.d;  // rank of every component
  std::vector<GRMatrix> fb, vb, pb;
  for (i64 i = 0; i < r; ++i) {
    GRMatrix F(R, n, n), V(R, n, n), P(R, n, n);
    for (i64 b = 0; b < cfg.h; ++b) {
      const MonoBlock& mb = blocks[size_t(b)];
      for (i64 j = 0; j < cfg.d; ++j) {
        i64 col = b * cfg.d + j;
        i64 e_f = mb.eps[size_t(i * cfg.d + j)];
        F.at(col, col) = R.from_int(e_f ? cfg.p : 1);
        i64 pi = wrap(i - 1, r);
        i64 e_v = 1 - mb.eps[size_t(pi * cfg.d + j)];
        V.at(col, col) = R.from_int(e_v ? cfg.p : 1);
        i64 e_p = mb.eta[size_t(i * cfg.d + j)];
        P.at(b * cfg.d + wrap(j + 1, cfg.d), col) =
            R.from_int(e_p ? cfg.p : 1);
      }
    }
    fb.push_back(F);
    vb.push_back(V);
    pb.push_back(P);
  }

  ODParams params{cfg.p, cfg.f, cfg.d, cfg.f};
  ODModule M = make_od_module(params, cfg.m, s,
                              std::vector<i64>(size_t(r), n), fb, vb, pb);

  std::mt19937_64 rng(seed);
  std::vector<GRMatrix> U;
  for (i64 c = 0; c < r; ++c) U.push_back(random_gr_invertible(R, n, rng));
  ODModule out = od_change_basis(M, U);
  ensure_valid_od(out);
  return out;
}

ODModule od_change_basis(const ODModule& M, const std::vector<GRMatrix>& U) {
  if (i64(U.size()) != M.r)
    throw validation_error("base change needs one block per component");
  for (i64 c = 0; c < M.r; ++c)
    if (U[size_t(c)].rows != M.dims[size_t(c)] ||
        U[size_t(c)].cols != M.dims[size_t(c)])
      throw validation_error("base change block has the wrong shape");

  auto conj = [&](const GRGradedMap& T) {
    GRGradedMap out;
    out.twist = T.twist;
    out.shift = T.shift;
    for (i64 c = 0; c < M.r; ++c) {
      GRMatrix tw = gr_mat_frob(M.R, U[size_t(c)], T.twist);
      out.blocks.push_back(
          gr_mat_mul(M.R,
                     gr_mat_mul(M.R, U[size_t(wrap(c + T.shift, M.r))],
                                T.blocks[size_t(c)]),
                     gr_inverse(M.R, tw)));
    }
    return out;
  };

  ODModule out = M;
  out.F = conj(M.F);
  out.V = conj(M.V);
  out.Pi = conj(M.Pi);
  return out;
}

ODModule od_direct_sum(const ODModule& A, const ODModule& B) {
  const ODParams& pa = A.params;
  const ODParams& pb = B.params;
  if (pa.p != pb.p || pa.f != pb.f || pa.d != pb.d ||
      pa.twist_shift != pb.twist_shift || A.m != B.m || A.s != B.s)
    throw validation_error("direct sum needs matching parameters");

  std::vector<i64> dims(size_t(A.r));
  for (i64 c = 0; c < A.r; ++c)
    dims[size_t(c)] = A.dims[size_t(c)] + B.dims[size_t(c)];
  std::vector<GRMatrix> fb, vb, pbk;
  for (i64 c = 0; c < A.r; ++c) {
    fb.push_back(gr_block_diag(A.R, A.F.blocks[size_t(c)], B.F.blocks[size_t(c)]));
    vb.push_back(gr_block_diag(A.R, A.V.blocks[size_t(c)], B.V.blocks[size_t(c)]));
    pbk.push_back(
        gr_block_diag(A.R, A.Pi.blocks[size_t(c)], B.Pi.blocks[size_t(c)]));
  }
  return make_od_module(pa, A.m, A.s, dims, fb, vb, pbk);
}

}  // namespace fvect
