#include <map>
#include <set>

#include <gtest/gtest.h>

#include "fibmod/explore.hpp"
#include "oracle.hpp"

using namespace fibmod;

namespace {

// Block with entries (x00, x10, x01, x11).
BinaryBlock blk(int x00, int x10, int x01, int x11) { return {x00, x10, x01, x11}; }

// Oracle: binary windows reached from `b` at shifts with h, v <= bound.
std::map<std::pair<int, int>, BinaryBlock> oracle_windows(const BinaryBlock& b, int bound) {
  const auto g = oracle::fill2(1, 1, 1, 1, {b[0], b[1], b[2], b[3]}, bound + 2, bound + 2);
  std::map<std::pair<int, int>, BinaryBlock> out;
  for (int h = 0; h <= bound; ++h)
    for (int v = 0; v <= bound; ++v) {
      BinaryBlock w{};
      bool binary = true;
      for (int i = 0; i < 4; ++i) {
        const oracle::Big& x = g.at(h + i % 2, v + i / 2);
        if (x != 0 && x != 1) binary = false;
        w[i] = x.get_si();
      }
      if (binary) out[{h, v}] = w;
    }
  return out;
}

}  // namespace

TEST(Explore, Enumeration) {
  const auto blocks = enumerate_blocks();
  ASSERT_EQ(blocks.size(), 16U);
  EXPECT_EQ(blocks.front(), blk(0, 0, 0, 0));
  std::set<BinaryBlock> distinct(blocks.begin(), blocks.end());
  EXPECT_EQ(distinct.size(), 16U);
  for (std::size_t i = 0; i < blocks.size(); ++i) EXPECT_EQ(block_index(blocks[i]), i);
}

TEST(Explore, BinaryWindowsMatchOracle) {
  for (const auto& b : enumerate_blocks()) {
    const auto seq = block_sequence(b);
    const auto expected = oracle_windows(b, 4);
    for (std::uint64_t h = 0; h <= 4; ++h)
      for (std::uint64_t v = 0; v <= 4; ++v) {
        const auto got = binary_window(seq, {h, v});
        const auto it = expected.find({static_cast<int>(h), static_cast<int>(v)});
        ASSERT_EQ(got.has_value(), it != expected.end());
        if (got) {
          EXPECT_EQ(*got, it->second);
        }
      }
  }
}

TEST(Explore, PaperShiftRelations) {
  const auto b1 = block_sequence(blk(1, 0, 0, 0));
  EXPECT_EQ(binary_window(b1, {1, 0}), blk(0, 1, 0, 0));
  EXPECT_EQ(binary_window(b1, {2, 0}), blk(1, 1, 0, 0));
  EXPECT_EQ(binary_window(b1, {0, 1}), blk(0, 0, 1, 0));
  EXPECT_EQ(binary_window(b1, {0, 2}), blk(1, 0, 1, 0));
  EXPECT_EQ(binary_window(b1, {1, 1}), blk(0, 0, 0, 1));
  EXPECT_EQ(binary_window(b1, {2, 1}), blk(0, 0, 1, 1));
  EXPECT_EQ(binary_window(b1, {1, 2}), blk(0, 1, 0, 1));
  EXPECT_EQ(binary_window(b1, {2, 2}), blk(1, 1, 1, 1));
  const auto b2 = block_sequence(blk(0, 1, 1, 0));
  EXPECT_EQ(binary_window(b2, {1, 0}), blk(1, 1, 0, 1));
  EXPECT_EQ(binary_window(b2, {0, 1}), blk(1, 0, 1, 1));
  const auto b3 = block_sequence(blk(1, 0, 0, 1));
  EXPECT_EQ(binary_window(b3, {1, 0}), blk(0, 1, 1, 1));
  EXPECT_EQ(binary_window(b3, {0, 1}), blk(0, 1, 1, 1));
}

TEST(Explore, OrbitCensus) {
  const auto orbits = classify_orbits();
  ASSERT_EQ(orbits.size(), 5U);
  std::map<std::string, std::size_t> sizes;
  std::set<BinaryBlock> covered;
  for (const auto& o : orbits) {
    const auto label = primitive_label(o.primitive);
    ASSERT_TRUE(label);
    sizes[*label] = o.members.size();
    EXPECT_EQ(o.members.front().block, o.primitive);
    for (const auto& m : o.members) {
      EXPECT_TRUE(covered.insert(m.block).second) << "block in two orbits";
      EXPECT_EQ(binary_window(block_sequence(o.primitive), m.shift), m.block);
    }
  }
  EXPECT_EQ(covered.size(), 16U);
  EXPECT_EQ(sizes, (std::map<std::string, std::size_t>{{"B_0", 1}, {"B_1", 9}, {"B_2", 3}, {"B_3", 2}, {"B_4", 1}}));
  EXPECT_EQ(primitive_label(blk(0, 1, 1, 0)), "B_2");
  EXPECT_FALSE(primitive_label(blk(1, 1, 1, 1)));
}

TEST(Explore, ShiftNames) {
  EXPECT_EQ(shift_name({2, 1}, "B_1"), "H^2V(B_1)");
  EXPECT_EQ(shift_name({0, 0}, "B_4"), "B_4");
  EXPECT_EQ(shift_name({1, 1}, "B_1"), "HV(B_1)");
  EXPECT_EQ(block_to_string(blk(1, 0, 0, 0)), "0 0\n1 0");
}

TEST(Explore, GenerationCertificate) {
  const auto cert = generation_certificate();
  ASSERT_EQ(cert.rows.size(), 4U);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(cert.rows[r][c], r == c ? 1 : 0);
  EXPECT_EQ(cert.determinant, 1);
  const auto coords = certificate_coordinates(cert, blk(1, 1, 0, 1));
  EXPECT_EQ(coords, (std::vector<mpq_class>{1, 1, 0, 1}));
}

TEST(Explore, Determinants) {
  EXPECT_EQ(integer_determinant({{2, 1}, {7, 4}}), 1);
  EXPECT_EQ(integer_determinant({{0, 1, 2}, {1, 0, 3}, {4, -3, 8}}), -2);
  EXPECT_EQ(integer_determinant({{1, 2}, {2, 4}}), 0);
  EXPECT_EQ(rational_determinant({{mpq_class(1, 2), 1}, {1, 4}}), 1);
}

TEST(Explore, DeterminingPositions) {
  const auto spec = block_sequence(blk(0, 0, 0, 0)).spec();
  EXPECT_TRUE(positions_determine(spec, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  EXPECT_FALSE(positions_determine(spec, {{0, 0}, {1, 1}, {2, 2}, {3, 3}}));
  EXPECT_TRUE(positions_determine(spec, {{0, 0}, {1, 0}, {0, 1}, {2, 2}}));
  EXPECT_THROW(positions_determine(spec, {{0, 0}, {0, 0}, {0, 1}, {2, 2}}), Error);
  EXPECT_THROW(positions_determine(spec, {{0, 0}}), Error);
}
