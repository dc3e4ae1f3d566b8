#pragma once

/**
 * @file explore.hpp
 * @brief Census of 2x2 binary initial blocks for integer sequences of type
 *        (1,1) (x) (1,1) under the horizontal and vertical shifts.
 *
 * Blocks are written (x00, x10, x01, x11) where the first index runs along the
 * horizontal axis.  In text form the x01 x11 row is printed above x00 x10.
 */

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "fibmod/multiseq.hpp"

namespace fibmod {

using BinaryBlock = std::array<int, 4>;

struct Shift {
  std::uint64_t horizontal = 0;
  std::uint64_t vertical = 0;

  friend bool operator==(const Shift&, const Shift&) = default;
};

struct OrbitMember {
  BinaryBlock block;
  Shift shift;  ///< window of the primitive's sequence at this shift equals `block`
};

struct Orbit {
  BinaryBlock primitive;
  std::size_t primitive_index;  ///< position in enumerate_blocks()
  std::vector<OrbitMember> members;  ///< includes the primitive at shift (0,0)
};

/// All 16 blocks, counting in binary with x00 as the most significant digit.
std::vector<BinaryBlock> enumerate_blocks();
std::size_t block_index(const BinaryBlock& block);

/// The integer sequence of type (1,1) (x) (1,1) with this initial block.
MultiSequence block_sequence(const BinaryBlock& block);

/// Flattened 2x2 window at `shift`; nullopt when some entry is not 0 or 1.
std::optional<BinaryBlock> binary_window(const MultiSequence& mseq, Shift shift);

/// Partitions the blocks into shift orbits, examining shifts with both
/// components <= search_bound.  Throws AmbiguousAtBound if the partition
/// changes at search_bound + 2 or the primitives fail to cover all blocks.
std::vector<Orbit> classify_orbits(std::uint64_t search_bound = 4);

/// Name used for the five primitive blocks of the census ("B_0".."B_4").
std::optional<std::string> primitive_label(const BinaryBlock& block);

/// "H^2V(B_1)"-style name of a shift applied to a block label.
std::string shift_name(Shift shift, const std::string& label);

/// Two text rows: "x01 x11" above "x00 x10".
std::string block_to_string(const BinaryBlock& block);

struct GenerationCertificate {
  std::vector<std::vector<mpz_class>> rows;  ///< windows of B_1 at (0,0),(1,0),(0,1),(1,1)
  mpz_class determinant;
};

GenerationCertificate generation_certificate();

/// Coefficients c with sum_r c_r * rows[r] = target (exact rational solve).
std::vector<mpq_class> certificate_coordinates(const GenerationCertificate& cert, const BinaryBlock& target);

/// Whether the values at `positions` determine a rank-one sequence of `spec`
/// over Q: the matrix M[t][j] = prod_i P_{j_i}^[pos_t,i] must be invertible.
bool positions_determine(const FibSpec& spec, const std::vector<Index>& positions);

/// Determinant of a square integer matrix (fraction-free elimination).
mpz_class integer_determinant(std::vector<std::vector<mpz_class>> m);
/// Determinant of a square rational matrix.
mpq_class rational_determinant(std::vector<std::vector<mpq_class>> m);

}  // namespace fibmod
