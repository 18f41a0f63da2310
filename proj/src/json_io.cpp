#include "fvect/json_io.hpp"

#include <map>
#include <string>
#include <vector>

namespace fvect {

namespace {

using nlohmann::json;

void require_object(const json& j, const char* what) {
  if (!j.is_object())
    throw validation_error(std::string(what) + " must be a JSON object");
}

void reject_unknown_keys(const json& j, const std::vector<std::string>& allowed,
                         const char* what) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const auto& k : allowed) ok = ok || it.key() == k;
    if (!ok)
      throw validation_error("unexpected field \"" + it.key() + "\" in " +
                             what);
  }
}

i64 get_int(const json& j, const char* key, const char* what) {
  if (!j.contains(key))
    throw validation_error(std::string("missing field \"") + key + "\" in " +
                           what);
  const json& v = j.at(key);
  if (!v.is_number_integer())
    throw validation_error(std::string("field \"") + key + "\" in " + what +
                           " must be an integer");
  return v.get<i64>();
}

// decimal-string keys, rejecting anything that does not round-trip
i64 parse_key(const std::string& key, const char* what) {
  i64 v = 0;
  try {
    size_t used = 0;
    v = std::stoll(key, &used);
    if (used != key.size()) throw std::invalid_argument(key);
  } catch (const std::exception&) {
    throw validation_error("key \"" + key + "\" in " + what +
                           " is not a decimal integer");
  }
  if (std::to_string(v) != key)
    throw validation_error("key \"" + key + "\" in " + what +
                           " is not in canonical decimal form");
  return v;
}

std::vector<i64> parse_coeff_list(const json& v, i64 s, i64 bound,
                                  const char* what) {
  if (!v.is_array() || i64(v.size()) != s)
    throw validation_error(std::string(what) +
                           " entries must be coefficient lists of length " +
                           std::to_string(s));
  std::vector<i64> out(size_t(s), 0);
  for (i64 i = 0; i < s; ++i) {
    const json& c = v.at(size_t(i));
    if (!c.is_number_integer())
      throw validation_error(std::string(what) +
                             " coefficients must be integers");
    out[size_t(i)] = c.get<i64>();
    if (out[size_t(i)] < 0 || out[size_t(i)] >= bound)
      throw validation_error(std::string(what) + " coefficient " +
                             std::to_string(out[size_t(i)]) +
                             " is out of range");
  }
  return out;
}

json coeff_list_to_json(const std::vector<i64>& a) { return json(a); }

// exponent labels of the r components, p^i mod (p^r - 1)
std::vector<i64> component_exponents(i64 p, i64 r) {
  CharGroup G = char_group(p, r);
  std::vector<i64> out(size_t(r), 0);
  i64 e = G.normalize(1);
  for (i64 i = 0; i < r; ++i) {
    out[size_t(i)] = e;
    e = char_twist(G, e, 1);
  }
  return out;
}

json dims_to_json(const std::vector<i64>& exps, const std::vector<i64>& dims) {
  json out = json::object();
  for (size_t i = 0; i < dims.size(); ++i)
    out[std::to_string(exps[i])] = dims[i];
  return out;
}

std::vector<i64> dims_from_json(const json& j, const std::vector<i64>& exps,
                                const char* what) {
  require_object(j, what);
  std::map<i64, i64> byexp;
  for (auto it = j.begin(); it != j.end(); ++it) {
    i64 e = parse_key(it.key(), what);
    if (!it.value().is_number_integer())
      throw validation_error(std::string("dimension for exponent ") +
                             std::to_string(e) + " must be an integer");
    byexp[e] = it.value().get<i64>();
  }
  std::vector<i64> out(exps.size(), 0);
  for (size_t i = 0; i < exps.size(); ++i) {
    auto it = byexp.find(exps[i]);
    if (it == byexp.end())
      throw validation_error(std::string(what) + " is missing exponent " +
                             std::to_string(exps[i]));
    out[i] = it->second;
    byexp.erase(it);
  }
  if (!byexp.empty())
    throw validation_error(std::string(what) + " has exponent " +
                           std::to_string(byexp.begin()->first) +
                           " outside the component set");
  return out;
}

std::string block_key(const std::vector<i64>& exps, i64 src, i64 dst) {
  return std::to_string(exps[size_t(src)]) + "->" +
         std::to_string(exps[size_t(dst)]);
}

// shared shape of the F/V/Pi block maps: component src maps to
// src + shift mod r, keyed "src_exp->dst_exp", absent key = zero block
template <typename Mat, typename EntryToJson>
json blocks_to_json(const std::vector<Mat>& blocks,
                    const std::vector<i64>& exps, i64 shift,
                    EntryToJson&& entry) {
  i64 r = i64(exps.size());
  json out = json::object();
  for (i64 src = 0; src < r; ++src) {
    const Mat& b = blocks[size_t(src)];
    bool nonzero = false;
    json rows = json::array();
    for (i64 i = 0; i < b.rows; ++i) {
      json row = json::array();
      for (i64 c = 0; c < b.cols; ++c) {
        json e = entry(b.at(i, c), nonzero);
        row.push_back(std::move(e));
      }
      rows.push_back(std::move(row));
    }
    if (nonzero)
      out[block_key(exps, src, ((src + shift) % r + r) % r)] = std::move(rows);
  }
  return out;
}

template <typename Mat, typename MakeMat, typename EntryFrom>
std::vector<Mat> blocks_from_json(const json& j, const std::vector<i64>& exps,
                                  i64 shift, const std::vector<i64>& dims,
                                  const char* what, MakeMat&& make,
                                  EntryFrom&& entry) {
  require_object(j, what);
  i64 r = i64(exps.size());
  std::map<std::string, i64> key_to_src;
  for (i64 src = 0; src < r; ++src)
    key_to_src[block_key(exps, src, ((src + shift) % r + r) % r)] = src;

  std::vector<Mat> out;
  for (i64 src = 0; src < r; ++src) {
    i64 dst = ((src + shift) % r + r) % r;
    out.push_back(make(dims[size_t(dst)], dims[size_t(src)]));
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto found = key_to_src.find(it.key());
    if (found == key_to_src.end())
      throw validation_error("unexpected block key \"" + it.key() + "\" in " +
                             what);
    i64 src = found->second;
    i64 dst = ((src + shift) % r + r) % r;
    Mat& b = out[size_t(src)];
    const json& rows = it.value();
    if (!rows.is_array() || i64(rows.size()) != dims[size_t(dst)])
      throw validation_error("block \"" + it.key() + "\" in " + what +
                             " must have " + std::to_string(dims[size_t(dst)]) +
                             " rows");
    for (i64 i = 0; i < b.rows; ++i) {
      const json& row = rows.at(size_t(i));
      if (!row.is_array() || i64(row.size()) != dims[size_t(src)])
        throw validation_error("block \"" + it.key() + "\" in " + what +
                               " must have " +
                               std::to_string(dims[size_t(src)]) + " columns");
      for (i64 c = 0; c < b.cols; ++c) entry(b, i, c, row.at(size_t(c)));
    }
  }
  return out;
}

}  // namespace

json ring_to_json(const GaloisRing& R) {
  json j;
  j["p"] = R.p;
  j["m"] = R.m;
  j["s"] = R.s;
  j["modulus"] = coeff_list_to_json(R.modulus);
  return j;
}

GaloisRing ring_from_json(const json& j) {
  require_object(j, "ring");
  reject_unknown_keys(j, {"p", "m", "s", "modulus"}, "ring");
  i64 p = get_int(j, "p", "ring");
  i64 m = get_int(j, "m", "ring");
  i64 s = get_int(j, "s", "ring");
  GaloisRing R = gr_make(p, m, s);
  if (j.contains("modulus")) {
    GaloisRing::Elt given =
        parse_coeff_list(j.at("modulus"), s + 1, R.pm, "modulus");
    if (given != R.modulus)
      throw validation_error("modulus does not match the canonical choice");
  }
  return R;
}

json charsum_to_json(const CharSum& f) {
  json j;
  j["p"] = f.group.p;
  j["r"] = f.group.r;
  j["coeffs"] = coeffs_to_json(f);
  return j;
}

CharSum charsum_from_json(const json& j) {
  require_object(j, "character sum");
  reject_unknown_keys(j, {"p", "r", "coeffs"}, "character sum");
  i64 p = get_int(j, "p", "character sum");
  i64 r = get_int(j, "r", "character sum");
  CharGroup G = char_group(p, r);
  if (!j.contains("coeffs"))
    throw validation_error("missing field \"coeffs\" in character sum");
  const json& co = j.at("coeffs");
  require_object(co, "coeffs");
  std::vector<std::pair<i64, i64>> terms;
  for (auto it = co.begin(); it != co.end(); ++it) {
    i64 e = parse_key(it.key(), "coeffs");
    if (!it.value().is_number_integer())
      throw validation_error("coefficient for exponent " + std::to_string(e) +
                             " must be an integer");
    terms.emplace_back(e, it.value().get<i64>());
  }
  return cs_make(G, terms);
}

json coeffs_to_json(const CharSum& f) {
  json j = json::object();
  for (const auto& [e, c] : f.coeffs) j[std::to_string(e)] = c;
  return j;
}

json module_to_json(const GradedModule& M) {
  std::vector<i64> exps = component_exponents(M.p, M.r);
  json j;
  j["p"] = M.p;
  j["r"] = M.r;
  j["s"] = M.s;
  j["dims"] = dims_to_json(exps, M.dims);
  auto entry = [&](i64 code, bool& nonzero) {
    nonzero = nonzero || code != 0;
    return coeff_list_to_json(M.k.decode(code));
  };
  j["F"] = blocks_to_json(M.F.blocks, exps, +1, entry);
  j["V"] = blocks_to_json(M.V.blocks, exps, -1, entry);
  return j;
}

GradedModule module_from_json(const json& j) {
  require_object(j, "module");
  reject_unknown_keys(j, {"p", "r", "s", "dims", "F", "V"}, "module");
  i64 p = get_int(j, "p", "module");
  i64 r = get_int(j, "r", "module");
  i64 s = get_int(j, "s", "module");
  if (p < 2 || r < 1 || s < 1)
    throw validation_error("module parameters are out of range");
  FiniteField k = ff_make(p, s);
  std::vector<i64> exps = component_exponents(p, r);
  if (!j.contains("dims"))
    throw validation_error("missing field \"dims\" in module");
  std::vector<i64> dims = dims_from_json(j.at("dims"), exps, "dims");
  for (i64 d : dims)
    if (d < 0) throw validation_error("negative dimension in module");

  auto make = [&](i64 rows, i64 cols) {
    return FFMatrix(rows, cols);
  };
  auto entry = [&](FFMatrix& b, i64 i, i64 c, const json& v) {
    b.at(i, c) = k.encode(parse_coeff_list(v, s, p, "module"));
  };
  if (!j.contains("F"))
    throw validation_error("missing field \"F\" in module");
  if (!j.contains("V"))
    throw validation_error("missing field \"V\" in module");
  std::vector<FFMatrix> fb = blocks_from_json<FFMatrix>(
      j.at("F"), exps, +1, dims, "F", make, entry);
  std::vector<FFMatrix> vb = blocks_from_json<FFMatrix>(
      j.at("V"), exps, -1, dims, "V", make, entry);
  return make_graded_module(p, r, s, dims, fb, vb);
}

json od_to_json(const ODModule& M) {
  std::vector<i64> exps = component_exponents(M.params.p, M.r);
  i64 ts = M.params.twist_shift < 0 ? M.params.f : M.params.twist_shift;
  json params;
  params["p"] = M.params.p;
  params["f"] = M.params.f;
  params["d"] = M.params.d;
  params["m"] = M.m;
  params["s"] = M.s;
  if (ts != M.params.f) params["twist_shift"] = ts;
  json j;
  j["params"] = std::move(params);
  j["dims"] = dims_to_json(exps, M.dims);
  auto entry = [&](const GaloisRing::Elt& e, bool& nonzero) {
    nonzero = nonzero || !M.R.is_zero(e);
    return coeff_list_to_json(e);
  };
  j["F"] = blocks_to_json(M.F.blocks, exps, +1, entry);
  j["V"] = blocks_to_json(M.V.blocks, exps, -1, entry);
  j["Pi"] = blocks_to_json(M.Pi.blocks, exps, ts, entry);
  return j;
}

ODModule od_from_json(const json& j, std::optional<i64> twist_shift_override) {
  require_object(j, "module");
  reject_unknown_keys(j, {"params", "dims", "F", "V", "Pi"}, "module");
  if (!j.contains("params"))
    throw validation_error("missing field \"params\" in module");
  const json& pj = j.at("params");
  require_object(pj, "params");
  reject_unknown_keys(pj, {"p", "f", "d", "m", "s", "twist_shift"}, "params");
  ODParams params;
  params.p = get_int(pj, "p", "params");
  params.f = get_int(pj, "f", "params");
  params.d = get_int(pj, "d", "params");
  i64 m = get_int(pj, "m", "params");
  i64 s = get_int(pj, "s", "params");
  if (pj.contains("twist_shift"))
    params.twist_shift = get_int(pj, "twist_shift", "params");
  if (twist_shift_override) params.twist_shift = *twist_shift_override;
  if (params.p < 2 || params.f < 1 || params.d < 2 || m < 1 || s < 1)
    throw validation_error("module parameters are out of range");
  i64 r = params.f * params.d;
  i64 ts = params.twist_shift < 0 ? params.f : params.twist_shift;

  GaloisRing R = gr_make(params.p, m, s);
  std::vector<i64> exps = component_exponents(params.p, r);
  if (!j.contains("dims"))
    throw validation_error("missing field \"dims\" in module");
  std::vector<i64> dims = dims_from_json(j.at("dims"), exps, "dims");
  for (i64 d : dims)
    if (d < 0) throw validation_error("negative dimension in module");

  auto make = [&](i64 rows, i64 cols) { return GRMatrix(R, rows, cols); };
  auto entry = [&](GRMatrix& b, i64 i, i64 c, const json& v) {
    b.at(i, c) = parse_coeff_list(v, s, R.pm, "module");
  };
  for (const char* key : {"F", "V", "Pi"})
    if (!j.contains(key))
      throw validation_error(std::string("missing field \"") + key +
                             "\" in module");
  std::vector<GRMatrix> fb = blocks_from_json<GRMatrix>(
      j.at("F"), exps, +1, dims, "F", make, entry);
  std::vector<GRMatrix> vb = blocks_from_json<GRMatrix>(
      j.at("V"), exps, -1, dims, "V", make, entry);
  std::vector<GRMatrix> pb = blocks_from_json<GRMatrix>(
      j.at("Pi"), exps, ts, dims, "Pi", make, entry);
  return make_od_module(params, m, s, dims, fb, vb, pb);
}

json raynaud_to_json(const RaynaudParams& P) {
  json j;
  j["w"] = coeff_list_to_json(P.w);
  json pairs = json::array();
  for (const auto& [x, y] : P.pairs) {
    json pr = json::array();
    pr.push_back(coeff_list_to_json(x));
    pr.push_back(coeff_list_to_json(y));
    pairs.push_back(std::move(pr));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

RaynaudParams raynaud_from_json(const GaloisRing& R, const json& j) {
  require_object(j, "presentation");
  reject_unknown_keys(j, {"w", "pairs"}, "presentation");
  if (!j.contains("w"))
    throw validation_error("missing field \"w\" in presentation");
  if (!j.contains("pairs"))
    throw validation_error("missing field \"pairs\" in presentation");
  RaynaudParams P;
  P.R = R;
  P.w = parse_coeff_list(j.at("w"), R.s, R.pm, "presentation");
  const json& pairs = j.at("pairs");
  if (!pairs.is_array())
    throw validation_error("field \"pairs\" in presentation must be an array");
  for (const json& pr : pairs) {
    if (!pr.is_array() || pr.size() != 2)
      throw validation_error("each pair must be a two-element array");
    P.pairs.emplace_back(parse_coeff_list(pr.at(0), R.s, R.pm, "presentation"),
                         parse_coeff_list(pr.at(1), R.s, R.pm, "presentation"));
  }
  ensure_valid_params(P);
  return P;
}

json witness_to_json(const IsoResult& w) {
  json j;
  j["isomorphic"] = w.isomorphic;
  if (w.isomorphic) {
    json lam = json::array();
    for (const auto& e : w.lambda) lam.push_back(coeff_list_to_json(e));
    j["lambda"] = std::move(lam);
  }
  return j;
}

}  // namespace fvect
