#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "wheelfree/certificate.hpp"
#include "wheelfree/connectivity.hpp"
#include "wheelfree/generators.hpp"
#include "wheelfree/reduction.hpp"
#include "wheelfree/wheels.hpp"

namespace wheelfree {
namespace {

// Set WHEELFREE_UPDATE_GOLDEN=1 to rewrite the files after an intended change.
void expect_golden(const std::string& name, const std::string& actual) {
  const std::string path = std::string(WHEELFREE_GOLDEN_DIR) + "/" + name + ".txt";
  if (std::getenv("WHEELFREE_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(path, std::ios::binary) << actual;
    return;
  }
  std::ifstream in(path, std::ios::binary);
  ASSERT_TRUE(in.good()) << "missing golden file " << path;
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(actual, buf.str()) << name;
}

TEST(Golden, WheelInK5) { expect_golden("wheel_k5", render_certificate(*find_k_wheel(complete(5), 4))); }

TEST(Golden, FanInK44) {
  expect_golden("fan_k44", render_certificate(*find_k_fan(complete_bipartite(4), 4, VertexSet(8, {0, 1, 2, 3}), 4)));
}

TEST(Golden, ExtendedFanInC5) {
  Fan seed{0, VertexSet(5, {1, 2, 3, 4}), {{0, 1}}};
  expect_golden("fan_c5_extended", render_certificate(extend_fan(cycle_graph(5), seed, 2)));
}

TEST(Golden, WatkinsMesnerK44) {
  expect_golden("wm_k44", render_certificate(*wm_certificate(complete_bipartite(4), 4, VertexSet(8, {0, 1, 2, 3}))));
}

TEST(Golden, EndBlockC5) { expect_golden("end_block_c5", render_certificate(end_block(cycle_graph(5), VertexSet(5, {0})))); }

TEST(Golden, CycleInK4) { expect_golden("cycle_k4", render_certificate(*find_cycle_through(complete(4), VertexSet::full(4)))); }

TEST(Golden, ColoringOfK44) {
  auto r = color4(complete_bipartite(4));
  expect_golden("coloring_k44", render_certificate(*r.coloring));
  expect_golden("trace_k44", render_certificate(r.trace));
}

TEST(Golden, ColoringOfTightExample) {
  auto r = color4(tight_example(4));
  expect_golden("coloring_tight4", render_certificate(*r.coloring));
  expect_golden("trace_tight4", render_certificate(r.trace));
}

TEST(Certificate, EmptyListsLeaveNothingAfterTheColon) {
  EXPECT_EQ(CertificateWriter("x").field("empty", std::vector<Vertex>{}).str(), "certificate: x\nempty:\n");
}

}  // namespace
}  // namespace wheelfree
