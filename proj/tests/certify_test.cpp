#include <doctest.h>

#include <vector>

#include "drgcert/certify.hpp"
#include "drgcert/graph.hpp"
#include "drgcert/zgraph.hpp"

using namespace drg;
using cert::IntersectionArray;
using cert::Spectrum;
using graph::Graph;

namespace {

using Edges = std::vector<std::pair<uint32_t, uint32_t>>;

Graph cycle(uint32_t n) {
  Edges e;
  for (uint32_t i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, e);
}

Graph petersen() {
  Edges e = {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
             {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}};
  return Graph(10, e);
}

}  // namespace

TEST_CASE("intersection array derived quantities") {
  IntersectionArray c6{{2, 1, 1}, {1, 1, 2}};
  CHECK(c6.d() == 3);
  CHECK(c6.a() == std::vector<int64_t>{0, 0, 0, 0});
  CHECK(c6.k() == std::vector<int64_t>{1, 2, 2, 1});
  CHECK(c6.n() == 6);
  CHECK(c6.to_string() == "{2,1,1;1,1,2}");
  CHECK_NOTHROW(c6.validate());

  IntersectionArray bad{{2, 1}, {2, 1}};  // c1 != 1
  CHECK_THROWS_AS(bad.validate(), cert::InvalidArray);
  IntersectionArray frac{{3, 1}, {1, 2}};  // k2 = 3/2
  CHECK_THROWS_AS(frac.validate(), cert::InvalidArray);
}

TEST_CASE("distance regularity of the 6-cycle") {
  auto r = cert::check_distance_regular(cycle(6));
  REQUIRE(r.pass);
  CHECK(*r.array == IntersectionArray{{2, 1, 1}, {1, 1, 2}});
  CHECK(r.bases_checked == 6);
  CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("petersen graph certification") {
  auto r = cert::check_distance_regular(petersen());
  REQUIRE(r.pass);
  CHECK(*r.array == IntersectionArray{{3, 2}, {1, 1}});

  Spectrum s = cert::drg_spectrum(*r.array, 10);
  Spectrum want;
  want.pairs = {{3, 1}, {1, 5}, {-2, 4}};
  CHECK(s == want);
  CHECK(s.to_string() == "(3)^1 (1)^5 (-2)^4");

  auto srg = cert::check_srg(petersen());
  REQUIRE(srg.pass);
  CHECK(srg.v == 10);
  CHECK(srg.k == 3);
  CHECK(srg.lambda == 0);
  CHECK(srg.mu == 1);
}

TEST_CASE("refutations carry witnesses") {
  // P4 is not distance-regular (degrees differ)
  auto r = cert::check_distance_regular(Graph(4, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK_FALSE(r.pass);
  REQUIRE(r.witness.has_value());
  CHECK_FALSE(r.detail.empty());

  // C6 is regular but not strongly regular: mu is not constant
  auto srg = cert::check_srg(cycle(6));
  CHECK_FALSE(srg.pass);
  CHECK_FALSE(srg.detail.empty());

  // K4 minus an edge is not regular
  auto srg2 = cert::check_srg(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  CHECK_FALSE(srg2.pass);
}

TEST_CASE("C5 strongly regular parameters") {
  auto srg = cert::check_srg(cycle(5));
  REQUIRE(srg.pass);
  CHECK(srg.v == 5);
  CHECK(srg.k == 2);
  CHECK(srg.lambda == 0);
  CHECK(srg.mu == 1);
}

TEST_CASE("spectrum failures are typed") {
  // C5's array has irrational eigenvalues (1 +- sqrt(5))/2
  IntersectionArray c5{{2, 1}, {1, 1}};
  try {
    cert::drg_spectrum(c5, 5);
    FAIL("expected NonIntegralEigenvalue");
  } catch (const cert::NonIntegralEigenvalue& e) {
    CHECK(e.remainder.coeffs() == std::vector<lin::Int>{-1, 1, 1});
  }

  // feasible-looking array whose multiplicities are fractional
  IntersectionArray moore{{5, 3}, {1, 1}};
  CHECK(moore.n() == 21);
  CHECK_THROWS_AS(cert::drg_spectrum(moore, 21), cert::NonIntegralMultiplicity);

  // n that contradicts the array
  IntersectionArray c6{{2, 1, 1}, {1, 1, 2}};
  CHECK_THROWS_AS(cert::drg_spectrum(c6, 7), cert::InvalidArray);
}

TEST_CASE("intersection matrix layout") {
  IntersectionArray c6{{2, 1, 1}, {1, 1, 2}};
  lin::IntMat m = cert::intersection_matrix(c6);
  REQUIRE(m.rows == 4);
  int64_t want[4][4] = {{0, 1, 0, 0}, {2, 0, 1, 0}, {0, 1, 0, 2}, {0, 0, 1, 0}};
  for (uint32_t i = 0; i < 4; ++i)
    for (uint32_t j = 0; j < 4; ++j) CHECK(m.at(i, j) == want[i][j]);

  Spectrum s = cert::drg_spectrum(c6, 6);
  Spectrum want_s;
  want_s.pairs = {{2, 1}, {1, 2}, {-1, 2}, {-2, 1}};
  CHECK(s == want_s);
}

TEST_CASE("rank multiplicity oracle") {
  Graph c6 = cycle(6);
  CHECK(cert::multiplicity_by_rank(c6, 2) == 1);
  CHECK(cert::multiplicity_by_rank(c6, 1) == 2);
  CHECK(cert::multiplicity_by_rank(c6, -1) == 2);
  CHECK(cert::multiplicity_by_rank(c6, -2) == 1);
  CHECK(cert::multiplicity_by_rank(c6, 0) == 0);  // not an eigenvalue

  CHECK(cert::multiplicity_by_rank(petersen(), 1) == 5);
  CHECK(cert::multiplicity_by_rank(petersen(), -2) == 4);

  CHECK_THROWS_AS(cert::multiplicity_by_rank(c6, 2, 5), cert::TooLarge);
}

TEST_CASE("expected parameters by family") {
  auto z2 = cert::expected_params(cert::Family::Z, 2);
  REQUIRE(z2.array.has_value());
  CHECK(*z2.array == IntersectionArray{{7, 6, 5}, {1, 2, 3}});
  REQUIRE(z2.spectrum.has_value());
  Spectrum zs;
  zs.pairs = {{7, 1}, {3, 21}, {-1, 35}, {-5, 7}};
  CHECK(*z2.spectrum == zs);
  CHECK(z2.bfs_classes == std::vector<int64_t>{1, 7, 21, 35});

  auto e3 = cert::expected_params(cert::Family::EbdZ, 3);
  CHECK(*e3.array == IntersectionArray{{27, 26, 24, 19}, {1, 3, 8, 27}});

  auto d2 = cert::expected_params(cert::Family::D4Far, 2);
  CHECK(*d2.array == IntersectionArray{{8, 7, 6, 5}, {1, 2, 3, 8}});
  Spectrum ds;
  ds.pairs = {{8, 1}, {4, 28}, {0, 70}, {-4, 28}, {-8, 1}};
  CHECK(*d2.spectrum == ds);

  auto b3 = cert::expected_params(cert::Family::B3DualPolar, 2);
  CHECK(*b3.array == IntersectionArray{{14, 12, 8}, {1, 3, 7}});

  auto sh = cert::expected_params(cert::Family::SrgHalf, 2);
  REQUIRE(sh.srg.has_value());
  CHECK(*sh.srg == std::array<int64_t, 4>{64, 28, 12, 12});

  CHECK(cert::family_from_string("ebdz") == cert::Family::EbdZ);
  CHECK_FALSE(cert::family_from_string("nope").has_value());
  CHECK(cert::family_name(cert::Family::SrgHalf) == "srghalf");
}

TEST_CASE("full certification of Z(2)") {
  Graph z = zg::build_z(2);
  auto rep = cert::certify_graph(z, "z2", std::make_pair(cert::Family::Z, 2));
  CHECK(rep.all_pass());
  CHECK(rep.n == 64);
  CHECK(rep.edges == 224);
  REQUIRE(rep.array.has_value());
  CHECK(*rep.array == "{7,6,5;1,2,3}");
  REQUIRE(rep.spectrum.has_value());
  CHECK(*rep.spectrum == "(7)^1 (3)^21 (-1)^35 (-5)^7");

  auto j = rep.to_json();
  CHECK(j["graph"]["n"] == 64);
  CHECK(j["graph"]["edges"] == 224);
  CHECK(j["graph"]["source"] == "z2");
  CHECK(j["checks"].is_array());
  for (const auto& chk : j["checks"]) CHECK(chk["pass"].get<bool>());
  CHECK(j["array"] == "{7,6,5;1,2,3}");
}

TEST_CASE("certification catches a family mismatch") {
  auto rep = cert::certify_graph(cycle(6), "c6",
                                 std::make_pair(cert::Family::Z, 2));
  CHECK_FALSE(rep.all_pass());
  bool found = false;
  for (const auto& c : rep.checks)
    if (c.name == "expected_array" && !c.pass) found = true;
  CHECK(found);
}

TEST_CASE("sampled and parallel sweeps agree") {
  Graph z = zg::build_z(2);
  auto full = cert::check_distance_regular(z, 0, 1);
  auto sampled = cert::check_distance_regular(z, 5, 1);
  auto parallel = cert::check_distance_regular(z, 0, 3);
  REQUIRE(full.pass);
  REQUIRE(sampled.pass);
  REQUIRE(parallel.pass);
  CHECK(*full.array == *sampled.array);
  CHECK(*full.array == *parallel.array);
  CHECK(full.bases_checked == 64);
  CHECK(sampled.bases_checked == 5);  // base 0 plus 4 sampled
  CHECK(parallel.bases_checked == 64);
}

TEST_CASE("disconnected input") {
  Graph two(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_THROWS_AS(cert::check_distance_regular(two), cert::Disconnected);
  auto rep = cert::certify_graph(two, "2xK3", std::nullopt);
  CHECK_FALSE(rep.all_pass());
  CHECK(rep.checks.front().name == "connected");
  CHECK_FALSE(rep.checks.front().pass);
}

TEST_CASE("srg certification appears for diameter 2") {
  // C5 has irrational eigenvalues: the spectrum check fails with the
  // golden-ratio quadratic as witness, but the DRG and SRG results still
  // certify, so the report carries (5,2,0,1) alongside the failed check.
  auto rep = cert::certify_graph(cycle(5), "c5", std::nullopt);
  auto get = [&rep](const std::string& name) -> const cert::CertReport::Check* {
    for (const auto& c : rep.checks)
      if (c.name == name) return &c;
    return nullptr;
  };
  REQUIRE(get("connected") != nullptr);
  CHECK(get("connected")->pass);
  REQUIRE(get("distance_regular") != nullptr);
  CHECK(get("distance_regular")->pass);
  REQUIRE(get("strongly_regular") != nullptr);
  CHECK(get("strongly_regular")->pass);
  REQUIRE(get("spectrum_integral") != nullptr);
  CHECK_FALSE(get("spectrum_integral")->pass);
  CHECK(get("spectrum_integral")->witness.find("x^2 + x - 1") != std::string::npos);
  CHECK_FALSE(rep.spectrum.has_value());
  CHECK_FALSE(rep.all_pass());
  REQUIRE(rep.srg.has_value());
  CHECK(*rep.srg == std::array<int64_t, 4>{5, 2, 0, 1});

  auto rep6 = cert::certify_graph(cycle(6), "c6", std::nullopt);
  CHECK(rep6.all_pass());
  CHECK_FALSE(rep6.srg.has_value());  // diameter 3
}