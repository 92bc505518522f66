#include "csa/subdivision.hpp"

#include <doctest.h>

#include <set>

#include "csa/errors.hpp"
#include "support.hpp"

using namespace csa;

TEST_CASE("barycentric: a point stays a point") {
  std::vector<Vertex> vs{{0, 0, "v0"}};
  const Complex pt = Complex::build(std::move(vs), {{0}});
  const Subdivision sub = barycentric(pt);
  CHECK(sub.result.vertex_table().size() == 1);
  CHECK(sub.result.facets().size() == 1);
}

TEST_CASE("barycentric counts on the edge and the triangle") {
  const Subdivision d1 = barycentric(standard_simplex(1));
  CHECK(d1.result.vertex_table().size() == 3);
  CHECK(d1.result.facets().size() == 2);
  CHECK(d1.result.facets().size() ==
        static_cast<std::size_t>(testsupport::count_maximal_chains(standard_simplex(1))));

  const Subdivision d2 = barycentric(standard_simplex(2));
  CHECK(d2.result.vertex_table().size() == 7);  // nonempty faces of the triangle
  CHECK(d2.result.facets().size() == 6);
  CHECK(d2.result.facets().size() ==
        static_cast<std::size_t>(testsupport::count_maximal_chains(standard_simplex(2))));
}

TEST_CASE("barycentric facets carry the full base facet") {
  const Subdivision sub = barycentric(standard_simplex(2));
  for (const auto& f : sub.result.facets()) CHECK(sub.carrier_of(f) == Simplex{0, 1, 2});
}

TEST_CASE("chromatic subdivision of a point is a matching point") {
  std::vector<Vertex> vs{{0, 7, "v0"}};
  const Complex pt = Complex::build(std::move(vs), {{0}});
  const Subdivision sub = chromatic_subdivision(pt);
  CHECK(sub.result.vertex_table().size() == 1);
  CHECK(sub.result.vertex_table()[0].color == 7);
}

TEST_CASE("chromatic subdivision of the edge") {
  const Subdivision sub = chromatic_subdivision(standard_simplex(1));
  CHECK(sub.result.vertex_table().size() == 4);
  CHECK(sub.result.facets().size() == 3);
  CHECK(sub.result.is_chromatic());
}

TEST_CASE("chromatic subdivision of the triangle matches the brute-force definition") {
  const Complex d2 = standard_simplex(2);
  const Subdivision sub = chromatic_subdivision(d2);
  CHECK(sub.result.vertex_table().size() == 12);
  CHECK(sub.result.facets().size() == 13);

  // oracle: every set of (color, face) pairs allowed by the definition is
  // a member, and nothing else is
  const auto expected = testsupport::enumerate_ch_simplexes(d2);
  std::set<Simplex> expected_ids;
  for (const auto& tuple : expected) {
    Simplex s;
    for (const auto& [color, face] : tuple) {
      bool found = false;
      for (const auto& v : sub.result.vertex_table()) {
        if (v.color == color && sub.vertex_carrier[v.id] == face) {
          s.push_back(v.id);
          found = true;
          break;
        }
      }
      REQUIRE(found);
    }
    expected_ids.insert(normalize_simplex(std::move(s)));
  }
  const auto actual = sub.result.all_simplexes();
  CHECK(expected_ids == std::set<Simplex>(actual.begin(), actual.end()));
}

TEST_CASE("chromatic facet counts agree with ordered set partition counts") {
  // one subdivision layer has as many facets as there are ordered set
  // partitions of the process set
  for (int n = 0; n <= 3; ++n) {
    const Subdivision sub = chromatic_subdivision(standard_simplex(n));
    CHECK(static_cast<long>(sub.result.facets().size()) == testsupport::fubini(n + 1));
  }
}

TEST_CASE("chromatic subdivision rejects non-chromatic bases") {
  std::vector<Vertex> vs{{0, 0, "a"}, {1, 0, "b"}};
  const Complex bad = Complex::build(std::move(vs), {{0, 1}});
  CHECK_THROWS_AS(chromatic_subdivision(bad), TaskError);
}

TEST_CASE("subdivision of a complex glues along shared faces") {
  // two triangles sharing an edge
  std::vector<Vertex> vs;
  for (int i = 0; i < 4; ++i) vs.push_back({i, i % 3, "v" + std::to_string(i)});
  vs[3].color = 0;  // colors 0,1,2 and 0: both facets properly colored
  const Complex two = Complex::build(std::move(vs), {{0, 1, 2}, {1, 2, 3}});
  const Subdivision sub = chromatic_subdivision(two);
  CHECK(sub.result.facets().size() == 26);
  // the shared edge {1,2} is subdivided once, not twice
  long shared = 0;
  for (const auto& v : sub.result.vertex_table())
    if (sub.vertex_carrier[v.id] == Simplex{1, 2}) ++shared;
  CHECK(shared == 2);  // one vertex per color of the shared edge
  CHECK(verify_chromatic_subdivision(sub).pass);
}

TEST_CASE("subdivision of a non-pure complex works facet-wise") {
  // triangle plus a dangling edge
  std::vector<Vertex> vs{{0, 0, "v0"}, {1, 1, "v1"}, {2, 2, "v2"}, {3, 0, "v3"}};
  const Complex base = Complex::build(std::move(vs), {{0, 1, 2}, {2, 3}});
  const Subdivision sub = chromatic_subdivision(base);
  CHECK(sub.result.facets().size() == 16);  // 13 from the triangle, 3 from the edge
  CHECK_FALSE(sub.result.is_pure());
  CHECK(verify_chromatic_subdivision(sub).pass);
}

TEST_CASE("verify_chromatic_subdivision flags a corrupted carrier") {
  Subdivision sub = chromatic_subdivision(standard_simplex(2));
  // a corner suddenly claims the whole base simplex as carrier
  for (auto& carrier : sub.vertex_carrier)
    if (carrier.size() == 1 && carrier[0] == 0) carrier = {0, 1, 2};
  const auto check = verify_chromatic_subdivision(sub);
  CHECK_FALSE(check.pass);
}

TEST_CASE("iterate_ch: counts and carrier composition") {
  const Complex d2 = standard_simplex(2);
  CHECK(iterate_ch(d2, 0).result.facets().size() == 1);
  CHECK(iterate_ch(d2, 1).result.facets().size() == 13);
  const Subdivision twice = iterate_ch(d2, 2);
  CHECK(twice.result.facets().size() == 169);
  // composed carriers land in the original base
  for (const auto& carrier : twice.vertex_carrier) {
    CHECK(!carrier.empty());
    CHECK(d2.contains(carrier));
  }
}

TEST_CASE("corner vertices stay on base vertices") {
  for (int n = 1; n <= 2; ++n) {
    const Subdivision sub = iterate_ch(standard_simplex(n), 2);
    for (VertexId v = 0; v <= n; ++v) {
      long corners = 0;
      for (const auto& vert : sub.result.vertex_table())
        if (sub.vertex_carrier[vert.id] == Simplex{v}) {
          ++corners;
          CHECK(vert.color == sub.base.vertex(v).color);
        }
      CHECK(corners == 1);
    }
  }
}

TEST_CASE("carrier_of: corners, center facet, and error case") {
  const Subdivision sub = chromatic_subdivision(standard_simplex(2));
  // central facet: all faces equal to the base facet
  Simplex central;
  for (const auto& v : sub.result.vertex_table())
    if (sub.vertex_carrier[v.id] == Simplex{0, 1, 2}) central.push_back(v.id);
  central = normalize_simplex(std::move(central));
  REQUIRE(central.size() == 3);
  CHECK(sub.result.contains(central));
  CHECK(sub.carrier_of(central) == Simplex{0, 1, 2});
  CHECK(sub.carrier_of({}).empty());
  CHECK_THROWS_AS(sub.carrier_of({0, 1, 2}), InputError);  // corners span no simplex
}

TEST_CASE("verify_chromatic_subdivision accepts Ch and the identity") {
  CHECK(verify_chromatic_subdivision(identity_subdivision(standard_simplex(2))).pass);
  CHECK(verify_chromatic_subdivision(chromatic_subdivision(standard_simplex(2))).pass);
  CHECK(verify_chromatic_subdivision(iterate_ch(standard_simplex(1), 2)).pass);
}

TEST_CASE("verify_chromatic_subdivision rejects naively colored barycenters") {
  Subdivision sub = barycentric(standard_simplex(2));
  // inherit the smallest color of the carrier, which breaks properness
  std::vector<Vertex> recolored = sub.result.vertex_table();
  for (auto& v : recolored) {
    int c = sub.base.vertex(sub.vertex_carrier[v.id].front()).color;
    for (VertexId b : sub.vertex_carrier[v.id])
      c = std::min(c, sub.base.vertex(b).color);
    v.color = c;
  }
  sub.result = Complex::build(std::move(recolored), sub.result.facets());
  const auto check = verify_chromatic_subdivision(sub);
  CHECK_FALSE(check.pass);
  CHECK(!check.violations.empty());
}

TEST_CASE("carrier monotonicity over all faces of Ch(triangle)") {
  const Subdivision sub = chromatic_subdivision(standard_simplex(2));
  const auto all = sub.result.all_simplexes();
  for (const auto& s : all) {
    const Simplex cs = sub.carrier_of(s);
    for (const auto& t : all)
      if (is_subset(t, s)) CHECK(is_subset(sub.carrier_of(t), cs));
  }
}
