#include "csa/convergence.hpp"

#include <doctest.h>

#include <set>

#include "csa/errors.hpp"
#include "csa/execution.hpp"
#include "support.hpp"

using namespace csa;

namespace {

/// Vertex of the subdivision carried by exactly the given base simplex
/// with the given color.
VertexId div_vertex(const Task& task, int color, const Simplex& carrier) {
  for (const auto& v : task.div().result.vertex_table())
    if (v.color == color && task.div().vertex_carrier[static_cast<std::size_t>(v.id)] == carrier)
      return v.id;
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("compute_core is plain intersection") {
  CHECK(compute_core({{0, 1, 2}, {1, 2}, {1, 2, 3}}) == Simplex{1, 2});
  CHECK(compute_core({{0, 1}}) == Simplex{0, 1});
  CHECK(compute_core({{0}, {1}}).empty());
  CHECK_THROWS_AS(compute_core({}), InputError);
}

TEST_CASE("convergence complex with empty core is the whole restriction") {
  const Task task = Task::make_ch(standard_simplex(2), 1);
  const Complex whole = convergence_complex(task, {Simplex{}}, {Simplex{0, 1, 2}});
  CHECK(whole.facets() == task.div().result.facets());

  // over a single input vertex: exactly the corner
  const Complex solo = convergence_complex(task, {Simplex{}}, {Simplex{0}});
  CHECK(solo.facets() == std::vector<Simplex>{{task.corner_vertex(0)}});
}

TEST_CASE("convergence complex over a decided corner avoids its color") {
  const Task task = Task::make_ch(standard_simplex(2), 1);
  const VertexId corner0 = task.corner_vertex(0);
  const Complex link = convergence_complex(task, {Simplex{corner0}}, {Simplex{0, 1, 2}});
  for (VertexId v : link.active_vertices()) CHECK(task.color_of(v) != 0);
  CHECK_FALSE(link.empty());
}

TEST_CASE("convergence complex rejects a core outside the restriction") {
  const Task task = Task::make_ch(standard_simplex(2), 1);
  // two corners of distinct colors never span a simplex of the subdivision
  const Simplex bad = normalize_simplex({task.corner_vertex(0), task.corner_vertex(1)});
  CHECK_THROWS_AS(convergence_complex(task, {bad}, {Simplex{0, 1, 2}}), ContractError);
}

TEST_CASE("choose_start_vertex picks the least label and surfaces misses") {
  const Task task = Task::make_ch(standard_simplex(2), 1);
  // whole subdivision: the least color-0 vertex is the corner (label "c0:0")
  CHECK(choose_start_vertex(task, {}, {0, 1, 2}, 0) == task.corner_vertex(0));
  // restriction to the edge {1,2} has no color-0 vertex
  CHECK_THROWS_AS(choose_start_vertex(task, {}, {1, 2}, 0), ContractError);
  // single-vertex complex of the right color
  CHECK(choose_start_vertex(task, {}, {1}, 1) == task.corner_vertex(1));
}

TEST_CASE("decision_check finds the unique own-color vertex") {
  const Task task = Task::make_ch(standard_simplex(2), 1);
  const VertexId u0 = task.corner_vertex(0);
  const VertexId x1 = div_vertex(task, 1, {0, 1});
  const VertexId y2 = div_vertex(task, 2, {0, 1, 2});
  CHECK(decision_check(task, {{u0, x1}, {u0}}, 0) == u0);
  CHECK(decision_check(task, {{x1}, {x1, y2}}, 0) == std::nullopt);
  CHECK(decision_check(task, {{u0}, {x1}}, 0) == std::nullopt);  // empty intersection
}

TEST_CASE("update_view follows the union/intersection formula") {
  const Task task = Task::make_ch(standard_simplex(2), 1);
  const VertexId d0 = task.corner_vertex(0);
  const VertexId x1 = div_vertex(task, 1, {0, 1});
  const VertexId y2 = div_vertex(task, 2, {0, 1, 2});

  // the own-color core vertex is tossed
  CHECK(update_view(task, {Simplex{x1, y2}}, {Simplex{d0}}, 0) ==
        normalize_simplex({x1, y2}));
  // chain with empty cores and no own-color vertex: plain union
  CHECK(update_view(task, {Simplex{x1}, Simplex{x1, y2}}, {Simplex{}, Simplex{}}, 0) ==
        normalize_simplex({x1, y2}));
  // round-1 variant: union minus own color
  CHECK(update_view(task, {Simplex{d0, x1}, Simplex{d0}}, {}, 0) == Simplex{x1});
}

TEST_CASE("chain_agree: singleton first class stays at its start vertex") {
  const Task task = Task::make_ch(standard_simplex(2), 1);
  const VertexId v0 = task.corner_vertex(0);
  std::vector<ChainInput> inputs{{0, v0, {}, {0}}};
  const ChainResult result = chain_agree(task, inputs, {{0}});
  REQUIRE(result.classes.size() == 1);
  CHECK(result.classes[0].output == Simplex{v0});
}

TEST_CASE("chain_agree: concurrent corners extend to a shared simplex") {
  const Task task = Task::make_ch(standard_simplex(1), 1);
  std::vector<ChainInput> inputs{{0, task.corner_vertex(0), {}, {0}},
                                 {1, task.corner_vertex(1), {}, {1}}};
  const ChainResult result = chain_agree(task, inputs, {{0, 1}});
  REQUIRE(result.classes.size() == 1);
  const Simplex& out = result.classes[0].output;
  CHECK(task.div().result.contains(out));
  // the chosen simplex carries both colors, so both processes can decide
  std::set<int> colors;
  for (VertexId v : out) colors.insert(task.color_of(v));
  CHECK(colors == std::set<int>{0, 1});
}

TEST_CASE("chain_agree: outputs are nested and live in their class links") {
  const Task task = Task::make_ch(standard_simplex(2), 1);
  std::vector<ChainInput> inputs{{0, task.corner_vertex(0), {}, {0}},
                                 {1, task.corner_vertex(1), {}, {1}},
                                 {2, task.corner_vertex(2), {}, {2}}};
  for (const auto& partition : enumerate_ordered_partitions({0, 1, 2})) {
    const ChainResult result = chain_agree(task, inputs, partition.blocks);
    Simplex parts;
    Simplex previous;
    for (std::size_t j = 0; j < result.classes.size(); ++j) {
      const ChainClass& cls = result.classes[j];
      parts = cls.parts;
      CHECK_FALSE(cls.output.empty());
      CHECK(task.link_contains(cls.output, cls.core, cls.parts));
      if (j > 0) CHECK(is_subset(previous, cls.output));
      previous = cls.output;
    }
    CHECK(parts == Simplex{0, 1, 2});
  }
}

TEST_CASE("chain_agree validates its inputs") {
  const Task task = Task::make_ch(standard_simplex(1), 1);
  CHECK_THROWS_AS(chain_agree(task, {}, {{0}}), InputError);
  std::vector<ChainInput> inputs{{0, task.corner_vertex(0), {}, {0}}};
  CHECK_THROWS_AS(chain_agree(task, inputs, {{0, 1}}), InputError);
  // core reaching outside the observed carrier
  std::vector<ChainInput> bad_core{{0, task.corner_vertex(0), {task.corner_vertex(1)}, {0}}};
  CHECK_THROWS_AS(chain_agree(task, bad_core, {{0}}), InputError);
  // start vertex inside its own core cannot lie in the link
  std::vector<ChainInput> bad_start{
      {0, task.corner_vertex(0), {task.corner_vertex(0)}, {0}}};
  CHECK_THROWS_AS(chain_agree(task, bad_start, {{0}}), InputError);
}

TEST_CASE("task construction rejects bad bases") {
  std::vector<Vertex> vs{{0, 0, "a"}, {1, 0, "b"}};
  const Complex bad = Complex::build(std::move(vs), {{0, 1}});
  CHECK_THROWS_AS(Task::make_ch(bad, 1), TaskError);
  CHECK_THROWS_AS(Task::make_ch(standard_simplex(1), -1), TaskError);
}
