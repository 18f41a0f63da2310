#include "fvect/dieudonne.hpp"

#include <algorithm>
#include <numeric>

namespace fvect {

namespace {

i64 wrap(i64 i, i64 r) { return ((i % r) + r) % r; }

FFMatrix block_diag(const FFMatrix& a, const FFMatrix& b) {
  FFMatrix out(a.rows + b.rows, a.cols + b.cols);
  for (i64 i = 0; i < a.rows; ++i)
    for (i64 j = 0; j < a.cols; ++j) out.at(i, j) = a.at(i, j);
  for (i64 i = 0; i < b.rows; ++i)
    for (i64 j = 0; j < b.cols; ++j) out.at(a.rows + i, a.cols + j) = b.at(i, j);
  return out;
}

FFMatrix submatrix(const FFMatrix& a, i64 r0, i64 r1, i64 c0, i64 c1) {
  FFMatrix out(r1 - r0, c1 - c0);
  for (i64 i = r0; i < r1; ++i)
    for (i64 j = c0; j < c1; ++j) out.at(i - r0, j - c0) = a.at(i, j);
  return out;
}

SemilinearMap sl_zero(const std::vector<i64>& dims, i64 twist) {
  i64 r = i64(dims.size());
  SemilinearMap m;
  m.twist = twist;
  for (i64 i = 0; i < r; ++i)
    m.blocks.emplace_back(dims[size_t(wrap(i + twist, r))], dims[size_t(i)]);
  return m;
}

}  // namespace

SemilinearMap sl_compose(const FiniteField& k, const SemilinearMap& a, const SemilinearMap& b) {
  i64 r = i64(b.blocks.size());
  if (i64(a.blocks.size()) != r) throw validation_error("composing maps of different gradings");
  SemilinearMap out;
  out.twist = a.twist + b.twist;
  for (i64 i = 0; i < r; ++i)
    out.blocks.push_back(ff_mat_mul(k, a.blocks[size_t(wrap(i + b.twist, r))],
                                    ff_mat_frob(k, b.blocks[size_t(i)], a.twist)));
  return out;
}

bool sl_is_zero(const SemilinearMap& a) {
  for (const auto& b : a.blocks)
    if (!ff_mat_is_zero(b)) return false;
  return true;
}

GradedModule make_graded_module(i64 p, i64 r, i64 s, std::vector<i64> dims,
                                std::vector<FFMatrix> f_blocks, std::vector<FFMatrix> v_blocks) {
  GradedModule M;
  M.p = p;
  M.r = r;
  M.s = s;
  M.k = ff_make(p, s);
  M.G = char_group(p, r);
  M.dims = std::move(dims);
  M.F.twist = 1;
  M.F.blocks = std::move(f_blocks);
  M.V.twist = -1;
  M.V.blocks = std::move(v_blocks);
  return M;
}

GradedModule zero_module(i64 p, i64 r, i64 s) {
  std::vector<i64> dims(size_t(r), 0);
  auto f = sl_zero(dims, 1);
  auto v = sl_zero(dims, -1);
  return make_graded_module(p, r, s, dims, f.blocks, v.blocks);
}

std::vector<std::string> validate(const GradedModule& M) {
  std::vector<std::string> errors;
  if (M.r < 1 || M.s < 1 || M.s % M.r != 0) {
    errors.push_back("grading rank must divide the field degree");
    return errors;
  }
  if (M.k.p != M.p || M.k.s != M.s) errors.push_back("field does not match p^s");
  if (i64(M.dims.size()) != M.r) errors.push_back("dimension vector has wrong length");
  for (i64 d : M.dims)
    if (d < 0) errors.push_back("negative component dimension");
  if (!errors.empty()) return errors;

  if (M.F.twist != 1) errors.push_back("F must have twist +1");
  if (M.V.twist != -1) errors.push_back("V must have twist -1");
  if (i64(M.F.blocks.size()) != M.r || i64(M.V.blocks.size()) != M.r) {
    errors.push_back("block lists must have one block per component");
    return errors;
  }
  for (i64 i = 0; i < M.r; ++i) {
    const auto& f = M.F.blocks[size_t(i)];
    if (f.rows != M.dims[size_t(wrap(i + 1, M.r))] || f.cols != M.dims[size_t(i)])
      errors.push_back("F block " + std::to_string(i) + " breaks the raising pattern");
    const auto& v = M.V.blocks[size_t(i)];
    if (v.rows != M.dims[size_t(wrap(i - 1, M.r))] || v.cols != M.dims[size_t(i)])
      errors.push_back("V block " + std::to_string(i) + " breaks the lowering pattern");
    for (i64 c : f.e)
      if (c < 0 || c >= M.k.q) errors.push_back("F block entry out of field range");
    for (i64 c : v.e)
      if (c < 0 || c >= M.k.q) errors.push_back("V block entry out of field range");
  }
  if (!errors.empty()) return errors;

  if (!sl_is_zero(sl_compose(M.k, M.F, M.V))) errors.push_back("FV is nonzero");
  if (!sl_is_zero(sl_compose(M.k, M.V, M.F))) errors.push_back("VF is nonzero");
  return errors;
}

void ensure_valid(const GradedModule& M) {
  auto errors = validate(M);
  if (errors.empty()) return;
  std::string msg = "invalid module:";
  for (const auto& e : errors) msg += " " + e + ";";
  throw validation_error(msg);
}

i64 total_dim(const GradedModule& M) {
  return std::accumulate(M.dims.begin(), M.dims.end(), i64(0));
}

i64 comp_exponent(const GradedModule& M, i64 i) { return char_twist(M.G, 1, i); }

CharSum cha(const GradedModule& M) {
  std::vector<std::pair<i64, i64>> terms;
  for (i64 i = 0; i < M.r; ++i) terms.emplace_back(comp_exponent(M, i), M.dims[size_t(i)]);
  return cs_make(M.G, terms);
}

CharSum big_char(const GradedModule& M) { return exp_F(cha(M)); }

GradedModule dual(const GradedModule& M) {
  std::vector<FFMatrix> f, v;
  for (i64 i = 0; i < M.r; ++i) {
    f.push_back(ff_transpose(ff_mat_frob(M.k, M.V.blocks[size_t(wrap(i + 1, M.r))], 1)));
    v.push_back(ff_transpose(ff_mat_frob(M.k, M.F.blocks[size_t(wrap(i - 1, M.r))], -1)));
  }
  return make_graded_module(M.p, M.r, M.s, M.dims, std::move(f), std::move(v));
}

GradedModule change_basis(const GradedModule& M, const std::vector<FFMatrix>& B) {
  if (i64(B.size()) != M.r) throw validation_error("need one basis matrix per component");
  std::vector<FFMatrix> binv;
  for (i64 i = 0; i < M.r; ++i) {
    if (B[size_t(i)].rows != M.dims[size_t(i)] || B[size_t(i)].cols != M.dims[size_t(i)])
      throw validation_error("basis matrix has wrong shape");
    binv.push_back(ff_inverse(M.k, B[size_t(i)]));
  }
  std::vector<FFMatrix> f, v;
  for (i64 i = 0; i < M.r; ++i) {
    f.push_back(ff_mat_mul(M.k, ff_mat_mul(M.k, binv[size_t(wrap(i + 1, M.r))], M.F.blocks[size_t(i)]),
                           ff_mat_frob(M.k, B[size_t(i)], 1)));
    v.push_back(ff_mat_mul(M.k, ff_mat_mul(M.k, binv[size_t(wrap(i - 1, M.r))], M.V.blocks[size_t(i)]),
                           ff_mat_frob(M.k, B[size_t(i)], -1)));
  }
  return make_graded_module(M.p, M.r, M.s, M.dims, std::move(f), std::move(v));
}

std::vector<GradedModule> v_filtration(const GradedModule& M) {
  ensure_valid(M);
  // bases of V^l M per component, in ambient coordinates
  std::vector<std::vector<FFMatrix>> chain;
  std::vector<FFMatrix> cur;
  for (i64 i = 0; i < M.r; ++i) cur.push_back(FFMatrix::identity(M.dims[size_t(i)]));
  chain.push_back(cur);
  auto basis_total = [&](const std::vector<FFMatrix>& bs) {
    i64 t = 0;
    for (const auto& b : bs) t += b.cols;
    return t;
  };
  while (basis_total(chain.back()) > 0) {
    const auto& prev = chain.back();
    std::vector<FFMatrix> next;
    for (i64 i = 0; i < M.r; ++i) {
      i64 src = wrap(i + 1, M.r);
      auto img = ff_mat_mul(M.k, M.V.blocks[size_t(src)], ff_mat_frob(M.k, prev[size_t(src)], -1));
      next.push_back(ff_column_space(M.k, img));
    }
    if (basis_total(next) >= basis_total(chain.back()))
      throw validation_error("V is not nilpotent");
    chain.push_back(next);
  }

  std::vector<GradedModule> layers;
  for (size_t l = 0; l + 1 < chain.size(); ++l) {
    const auto& big = chain[l];
    const auto& small = chain[l + 1];
    // complete each small basis to the big one; the added columns represent
    // the subquotient
    std::vector<FFMatrix> reps;
    std::vector<i64> ldims;
    for (i64 i = 0; i < M.r; ++i) {
      auto joint = ff_hcat(small[size_t(i)], big[size_t(i)]);
      std::vector<i64> pivots;
      auto tmp = joint;
      ff_rref(M.k, tmp, &pivots);
      FFMatrix t(joint.rows, 0);
      for (i64 c : pivots)
        if (c >= small[size_t(i)].cols)
          t = ff_hcat(t, submatrix(joint, 0, joint.rows, c, c + 1));
      reps.push_back(t);
      ldims.push_back(t.cols);
    }
    std::vector<FFMatrix> f, v;
    for (i64 i = 0; i < M.r; ++i) {
      i64 j = wrap(i + 1, M.r);
      FFMatrix blk(ldims[size_t(j)], ldims[size_t(i)]);
      auto img = ff_mat_mul(M.k, M.F.blocks[size_t(i)], ff_mat_frob(M.k, reps[size_t(i)], 1));
      if (ldims[size_t(j)] + small[size_t(j)].cols > 0) {
        auto sol = ff_solve(M.k, ff_hcat(reps[size_t(j)], small[size_t(j)]), img);
        blk = submatrix(sol, 0, ldims[size_t(j)], 0, sol.cols);
      } else if (!ff_mat_is_zero(img)) {
        throw validation_error("induced map escapes the filtration");
      }
      f.push_back(blk);
      v.emplace_back(ldims[size_t(wrap(i - 1, M.r))], ldims[size_t(i)]);
    }
    layers.push_back(make_graded_module(M.p, M.r, M.s, ldims, std::move(f), std::move(v)));
  }
  if (layers.empty()) layers.push_back(M);  // zero module: a single zero layer
  return layers;
}

std::pair<GradedModule, GradedModule> fitting_split(const GradedModule& M) {
  ensure_valid(M);
  SemilinearMap W = M.V;
  for (i64 i = 1; i < M.s; ++i) W = sl_compose(M.k, W, M.V);
  i64 n = std::max<i64>(total_dim(M), 1);
  std::vector<FFMatrix> B;
  std::vector<i64> nil_dims, bij_dims;
  for (i64 i = 0; i < M.r; ++i) {
    FFMatrix power = FFMatrix::identity(M.dims[size_t(i)]);
    for (i64 j = 0; j < n; ++j) power = ff_mat_mul(M.k, W.blocks[size_t(i)], power);
    auto kernel = ff_kernel_basis(M.k, power);
    auto image = ff_column_space(M.k, power);
    nil_dims.push_back(kernel.cols);
    bij_dims.push_back(image.cols);
    B.push_back(ff_hcat(kernel, image));
  }
  auto M2 = change_basis(M, B);
  std::vector<FFMatrix> fn, vn, fb, vb;
  for (i64 i = 0; i < M.r; ++i) {
    i64 up = wrap(i + 1, M.r), dn = wrap(i - 1, M.r);
    const auto& f = M2.F.blocks[size_t(i)];
    const auto& v = M2.V.blocks[size_t(i)];
    i64 ku = nil_dims[size_t(up)], kd = nil_dims[size_t(dn)], ki = nil_dims[size_t(i)];
    if (!ff_mat_is_zero(submatrix(f, ku, f.rows, 0, ki)) ||
        !ff_mat_is_zero(submatrix(f, 0, ku, ki, f.cols)) ||
        !ff_mat_is_zero(submatrix(v, kd, v.rows, 0, ki)) ||
        !ff_mat_is_zero(submatrix(v, 0, kd, ki, v.cols)))
      throw validation_error("fitting decomposition is not stable");
    fn.push_back(submatrix(f, 0, ku, 0, ki));
    fb.push_back(submatrix(f, ku, f.rows, ki, f.cols));
    vn.push_back(submatrix(v, 0, kd, 0, ki));
    vb.push_back(submatrix(v, kd, v.rows, ki, v.cols));
  }
  return {make_graded_module(M.p, M.r, M.s, nil_dims, std::move(fn), std::move(vn)),
          make_graded_module(M.p, M.r, M.s, bij_dims, std::move(fb), std::move(vb))};
}

GradedModule direct_sum(const GradedModule& a, const GradedModule& b) {
  if (a.p != b.p || a.r != b.r || a.s != b.s)
    throw validation_error("direct sum needs matching field data");
  std::vector<i64> dims;
  std::vector<FFMatrix> f, v;
  for (i64 i = 0; i < a.r; ++i) {
    dims.push_back(a.dims[size_t(i)] + b.dims[size_t(i)]);
    f.push_back(block_diag(a.F.blocks[size_t(i)], b.F.blocks[size_t(i)]));
    v.push_back(block_diag(a.V.blocks[size_t(i)], b.V.blocks[size_t(i)]));
  }
  return make_graded_module(a.p, a.r, a.s, std::move(dims), std::move(f), std::move(v));
}

}  // namespace fvect
