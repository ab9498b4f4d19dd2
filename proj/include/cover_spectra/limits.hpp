#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>

namespace cover_spectra {

// Size caps for the exponential routines. Defaults can be overridden through
// COVER_SPECTRA_MAX_* environment variables or the CLI flags.
struct Limits {
  std::size_t max_vertices = 16;         // decision-only runs
  std::size_t max_oracle_vertices = 12;  // brute-force oracle checks
  std::size_t max_edges = 24;            // cycle / packing enumeration
  std::size_t max_frontier = 20;         // Hall-surplus subset scans
  std::size_t max_enumeration = 2'000'000;
  std::size_t max_cover_vertices = 4096;
  std::size_t max_ball_vertices = 2048;
  std::size_t max_probe_dimension = 2048;
};

namespace detail {

inline std::size_t env_size(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    return static_cast<std::size_t>(std::stoull(raw));
  } catch (...) {
    return fallback;
  }
}

inline Limits limits_from_environment() {
  Limits l;
  l.max_vertices = env_size("COVER_SPECTRA_MAX_VERTICES", l.max_vertices);
  l.max_oracle_vertices = env_size("COVER_SPECTRA_MAX_ORACLE_VERTICES", l.max_oracle_vertices);
  l.max_edges = env_size("COVER_SPECTRA_MAX_EDGES", l.max_edges);
  l.max_frontier = env_size("COVER_SPECTRA_MAX_FRONTIER", l.max_frontier);
  l.max_enumeration = env_size("COVER_SPECTRA_MAX_ENUMERATION", l.max_enumeration);
  l.max_cover_vertices = env_size("COVER_SPECTRA_MAX_COVER_VERTICES", l.max_cover_vertices);
  l.max_ball_vertices = env_size("COVER_SPECTRA_MAX_BALL_VERTICES", l.max_ball_vertices);
  l.max_probe_dimension = env_size("COVER_SPECTRA_MAX_PROBE_DIMENSION", l.max_probe_dimension);
  return l;
}

}  // namespace detail

/// Process-wide caps. Mutable so that front ends can apply their flags once at startup.
inline Limits& limits() {
  static Limits instance = detail::limits_from_environment();
  return instance;
}

}  // namespace cover_spectra
