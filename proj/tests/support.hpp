#ifndef RATSURF_TESTS_SUPPORT_HPP
#define RATSURF_TESTS_SUPPORT_HPP

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ratsurf/lattice.hpp"
#include "ratsurf/spec_io.hpp"
#include "ratsurf/surface.hpp"

namespace test_support {

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(RATSURF_FIXTURE_DIR) + "/" + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline ratsurf::SurfaceSpec fixture_spec(const std::string& name) {
  return ratsurf::io::parse_spec(read_fixture(name));
}

inline ratsurf::DivisorClass E(std::size_t rank, std::size_t i) { return ratsurf::DivisorClass::basis(rank, i); }

inline ratsurf::DivisorClass times(long k, const ratsurf::DivisorClass& f) { return ratsurf::Integer(k) * f; }

inline ratsurf::DivisorClass random_class(std::mt19937_64& rng, std::size_t rank, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  std::vector<std::int64_t> c(rank);
  for (auto& x : c) x = dist(rng);
  return ratsurf::DivisorClass::from_int64(c);
}

// Degree in [0, dmax] and multiplicities in [-mmax, 0]: mostly effective.
inline ratsurf::DivisorClass random_plane_curve(std::mt19937_64& rng, std::size_t rank, long dmax, long mmax) {
  std::uniform_int_distribution<long> deg(0, dmax), mult(-mmax, 0);
  std::vector<std::int64_t> c(rank);
  c[0] = deg(rng);
  for (std::size_t i = 1; i < rank; ++i) c[i] = mult(rng);
  return ratsurf::DivisorClass::from_int64(c);
}

} // namespace test_support

#endif // RATSURF_TESTS_SUPPORT_HPP
