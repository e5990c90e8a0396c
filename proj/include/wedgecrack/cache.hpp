#pragma once

// Disk cache for the per-angle factorization tables: the merged pole table
// and the factor matrices at every pole are the expensive part of a solve,
// and sweeps revisit them. Files are versioned binary, written atomically
// (write to a temp name, then rename). Loading reproduces bit-identical
// doubles, so cached and fresh runs emit identical output.
//
// Layout (little-endian, raw doubles):
//   magic   "WCRK"            4 bytes
//   version u32               currently 1
//   alpha   f64               cache key, matched bitwise
//   rel_tol f64               cache key, matched bitwise
//   count   u32               number of table nodes (roots)
//   per node: kind u8, s.re f64, s.im f64,
//             delta_minus (4 x re,im), delta_plus (4 x re,im),
//             x_minus (4 x re,im)

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "wedgecrack/internal.hpp"

namespace wedgecrack {

namespace detail {

inline void put_f64(std::ostream& os, double v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(v));
}
inline void put_u32(std::ostream& os, std::uint32_t v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(v));
}
inline bool get_f64(std::istream& is, double& v) {
  return static_cast<bool>(is.read(reinterpret_cast<char*>(&v), sizeof(v)));
}
inline bool get_u32(std::istream& is, std::uint32_t& v) {
  return static_cast<bool>(is.read(reinterpret_cast<char*>(&v), sizeof(v)));
}

inline void put_mat(std::ostream& os, const Mat2& m) {
  for (Cplx e : {m.a, m.b, m.c, m.d}) {
    put_f64(os, e.real());
    put_f64(os, e.imag());
  }
}
inline bool get_mat(std::istream& is, Mat2& m) {
  double v[8];
  for (double& x : v)
    if (!get_f64(is, x)) return false;
  m = Mat2{{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]}};
  return true;
}

inline std::string cache_file_name(double alpha, double rel_tol, std::size_t n_roots) {
  std::uint64_t abits = 0, tbits = 0;
  std::memcpy(&abits, &alpha, sizeof(double));
  std::memcpy(&tbits, &rel_tol, sizeof(double));
  std::ostringstream name;
  name << "wc_a" << std::hex << abits << "_t" << tbits << "_n" << std::dec << n_roots << ".bin";
  return name.str();
}

inline constexpr std::uint32_t kCacheVersion = 1;

}  // namespace detail

inline void save_internal_data(const std::filesystem::path& dir, const InternalSystemData& data,
                               double rel_tol) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto name = detail::cache_file_name(data.roots.alpha, rel_tol, data.roots.size());
  const auto tmp = dir / (name + ".tmp");
  const auto final_path = dir / name;
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) return;  // caching is best effort
    os.write("WCRK", 4);
    detail::put_u32(os, detail::kCacheVersion);
    detail::put_f64(os, data.roots.alpha);
    detail::put_f64(os, rel_tol);
    detail::put_u32(os, static_cast<std::uint32_t>(data.roots.size()));
    for (std::size_t n = 0; n < data.roots.size(); ++n) {
      const char kind = data.roots[n].kind == RootKind::integer_pole ? 0 : 1;
      os.put(kind);
      detail::put_f64(os, data.roots[n].s.real());
      detail::put_f64(os, data.roots[n].s.imag());
      detail::put_mat(os, data.delta_minus[n]);
      detail::put_mat(os, data.delta_plus[n]);
      detail::put_mat(os, data.x_minus_at[n]);
    }
  }
  std::filesystem::rename(tmp, final_path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

inline std::optional<InternalSystemData> load_internal_data(const std::filesystem::path& dir,
                                                            const KhrapkovFactor& fact,
                                                            double rel_tol,
                                                            std::size_t n_roots) {
  const auto path = dir / detail::cache_file_name(fact.alpha(), rel_tol, n_roots);
  std::ifstream is(path, std::ios::binary);
  if (!is) return std::nullopt;
  char magic[4] = {};
  is.read(magic, 4);
  std::uint32_t version = 0, count = 0;
  double alpha = 0.0, tol = 0.0;
  if (!is || std::memcmp(magic, "WCRK", 4) != 0) return std::nullopt;
  if (!detail::get_u32(is, version) || version != detail::kCacheVersion) return std::nullopt;
  if (!detail::get_f64(is, alpha) || alpha != fact.alpha()) return std::nullopt;
  if (!detail::get_f64(is, tol) || tol != rel_tol) return std::nullopt;
  if (!detail::get_u32(is, count) || count != n_roots) return std::nullopt;

  InternalSystemData data;
  data.fact = &fact;
  data.roots.alpha = alpha;
  data.delta_minus.resize(count);
  data.delta_plus.resize(count);
  data.x_minus_at.resize(count);
  for (std::uint32_t n = 0; n < count; ++n) {
    const int kind = is.get();
    double re = 0.0, im = 0.0;
    if (!detail::get_f64(is, re) || !detail::get_f64(is, im)) return std::nullopt;
    data.roots.roots.push_back(
        {Cplx(re, im), kind == 0 ? RootKind::integer_pole : RootKind::sigma_zero});
    if (!detail::get_mat(is, data.delta_minus[n])) return std::nullopt;
    if (!detail::get_mat(is, data.delta_plus[n])) return std::nullopt;
    if (!detail::get_mat(is, data.x_minus_at[n])) return std::nullopt;
  }
  return data;
}

// Build the per-root tables, consulting the disk cache when a directory is
// configured. Pass an empty path to force a fresh build.
inline InternalSystemData cached_internal_data(const KhrapkovFactor& fact,
                                               const RootTable& roots,
                                               const std::filesystem::path& cache_dir) {
  const double rel_tol = fact.settings().rel_tol;
  if (!cache_dir.empty()) {
    if (auto hit = load_internal_data(cache_dir, fact, rel_tol, roots.size())) {
      // basic sanity: cached nodes must coincide with the requested table
      bool ok = hit->roots.size() == roots.size();
      for (std::size_t n = 0; ok && n < roots.size(); ++n)
        ok = hit->roots[n].s == roots[n].s;
      if (ok) return std::move(*hit);
    }
  }
  auto data = build_internal_data(fact, roots);
  if (!cache_dir.empty()) save_internal_data(cache_dir, data, rel_tol);
  return data;
}

}  // namespace wedgecrack
