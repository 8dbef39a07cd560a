#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "drgcert/errors.hpp"
#include "drgcert/exactlin.hpp"
#include "drgcert/graph.hpp"

namespace drg::cert {

struct Disconnected : Error {
  using Error::Error;
};
struct InvalidArray : Error {
  using Error::Error;
};
struct NonIntegralEigenvalue : Error {
  NonIntegralEigenvalue(const std::string& what, lin::IntPoly rem)
      : Error(what), remainder(std::move(rem)) {}
  lin::IntPoly remainder;  // the unfactored part of the charpoly
};
struct NonIntegralMultiplicity : Error {
  using Error::Error;
};
struct TooLarge : Error {
  using Error::Error;
};

/// {b0..b_{d-1}; c1..cd} with the usual derived quantities.
struct IntersectionArray {
  std::vector<int64_t> b;  // b0..b_{d-1}
  std::vector<int64_t> c;  // c1..cd

  uint32_t d() const { return uint32_t(b.size()); }
  /// a_i = b0 - b_i - c_i with b_d = 0, c_0 = 0; indices 0..d.
  std::vector<int64_t> a() const;
  /// k_0 = 1, k_i = k_{i-1} b_{i-1} / c_i; throws InvalidArray if not integral.
  std::vector<int64_t> k() const;
  uint64_t n() const;  // sum of k_i

  /// Throws InvalidArray unless c1 = 1, all b_i, c_i > 0, k_i integral.
  void validate() const;

  std::string to_string() const;  // "{7,6,5;1,2,3}"
  bool operator==(const IntersectionArray& o) const { return b == o.b && c == o.c; }
};

struct DrgWitness {
  uint32_t base = 0, u = 0;
  uint32_t i = 0;
  int64_t c_count = 0, b_count = 0;  // observed counts at (base, u)
  std::string to_string() const;
};

struct DrgResult {
  bool pass = false;
  std::optional<IntersectionArray> array;
  std::optional<DrgWitness> witness;
  std::string detail;
  uint64_t bases_checked = 0;
};

/// Certifies distance-regularity by BFS + neighbor counting from every base
/// vertex (or `sample` seeded random bases when sample > 0). Sweeps run on
/// `jobs` threads (0 = hardware concurrency); the witness on failure is the
/// lexicographically least violating (base, u) regardless of scheduling.
/// Throws Disconnected.
DrgResult check_distance_regular(const graph::Graph& g, uint64_t sample = 0,
                                 uint32_t jobs = 1);

/// Tridiagonal intersection matrix: entry (i-1,i) = c_i, (i,i) = a_i,
/// (i+1,i) = b_i.
lin::IntMat intersection_matrix(const IntersectionArray& ia);

struct Spectrum {
  std::vector<std::pair<int64_t, uint64_t>> pairs;  // (eigenvalue, multiplicity), decreasing
  std::string to_string() const;
  bool operator==(const Spectrum& o) const { return pairs == o.pairs; }
};

/// Exact spectrum from the intersection array: eigenvalues as integer roots
/// of the intersection-matrix charpoly, multiplicities via the standard
/// sequence m(theta) = n / sum_i k_i u_i(theta)^2 in rational arithmetic.
/// Throws NonIntegralEigenvalue / NonIntegralMultiplicity.
Spectrum drg_spectrum(const IntersectionArray& ia, uint64_t n);

/// Independent multiplicity oracle: n - rank(A - theta I) over Q.
/// Throws TooLarge when n exceeds the bound.
uint64_t multiplicity_by_rank(const graph::Graph& g, int64_t theta,
                              uint32_t bound = 1024);

struct SrgResult {
  bool pass = false;
  uint64_t v = 0;
  int64_t k = -1, lambda = -1, mu = -1;
  std::string detail;  // first violating pair when pass = false
};

/// Exhaustive strong-regularity check (regular; lambda on all adjacent
/// pairs, mu on all nonadjacent pairs).
SrgResult check_srg(const graph::Graph& g);

enum class Family { Z, EbdZ, D4Far, B3DualPolar, SrgHalf };

/// Parse "z", "ebdz", "d4far", "b3", "srghalf" (as used by --expect).
std::optional<Family> family_from_string(const std::string& s);
std::string family_name(Family fam);

struct Expected {
  std::optional<IntersectionArray> array;
  std::optional<Spectrum> spectrum;
  std::optional<std::array<int64_t, 4>> srg;  // v, k, lambda, mu
  std::vector<int64_t> bfs_classes;           // expected k_i, when array present
};

/// Closed-form expected parameters by direct substitution of q.
Expected expected_params(Family fam, uint64_t q);

/// JSON-serializable certification report.
struct CertReport {
  uint64_t n = 0;
  uint64_t edges = 0;
  std::string source;

  struct Check {
    std::string name;
    bool pass = false;
    std::string witness;     // empty when passing
    nlohmann::json values;   // optional extra data
  };
  std::vector<Check> checks;

  std::optional<std::string> array;
  std::optional<std::string> spectrum;
  std::optional<std::array<int64_t, 4>> srg;

  bool all_pass() const;
  nlohmann::json to_json() const;
};

/// Full certification: DRG check, spectrum, BFS class sizes, SRG when the
/// graph has diameter 2; with `expect`, compares everything against
/// expected_params. sample/jobs as in check_distance_regular.
CertReport certify_graph(const graph::Graph& g, const std::string& source,
                         const std::optional<std::pair<Family, uint64_t>>& expect,
                         uint64_t sample = 0, uint32_t jobs = 1);

}  // namespace drg::cert
