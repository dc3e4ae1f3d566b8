#include "fibmod/explore.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace fibmod {

namespace {

FibSpec fibonacci_square_spec() {
  const Ring z = RingDescriptor::integer();
  return FibSpec(std::vector<RecurrenceType>{RecurrenceType::of(z, {1, 1}), RecurrenceType::of(z, {1, 1})});
}

struct RawOrbits {
  std::vector<Orbit> orbits;
  bool covers_all = false;
};

// Shifts in order of total length, then horizontal-first.
std::vector<Shift> shifts_up_to(std::uint64_t bound) {
  std::vector<Shift> out;
  for (std::uint64_t h = 0; h <= bound; ++h)
    for (std::uint64_t v = 0; v <= bound; ++v) out.push_back({h, v});
  std::stable_sort(out.begin(), out.end(), [](const Shift& x, const Shift& y) {
    if (x.horizontal + x.vertical != y.horizontal + y.vertical)
      return x.horizontal + x.vertical < y.horizontal + y.vertical;
    return x.horizontal > y.horizontal;
  });
  return out;
}

RawOrbits classify_at(std::uint64_t bound) {
  const auto blocks = enumerate_blocks();
  const auto shifts = shifts_up_to(bound);

  // reach[b] = (target, first shift reaching it) for binary windows of b's sequence.
  std::vector<std::vector<OrbitMember>> reach(blocks.size());
  std::vector<bool> hit_by_nontrivial(blocks.size(), false);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const MultiSequence seq = block_sequence(blocks[b]);
    std::set<std::size_t> seen;
    for (const Shift& s : shifts) {
      auto w = binary_window(seq, s);
      if (!w) continue;
      const std::size_t target = block_index(*w);
      // The zero block is its own shift; only other blocks can demote a primitive.
      if (!(s == Shift{}) && target != b) hit_by_nontrivial[target] = true;
      if (seen.insert(target).second) reach[b].push_back({*w, s});
    }
  }

  RawOrbits out;
  std::vector<bool> covered(blocks.size(), false);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (hit_by_nontrivial[b]) continue;
    Orbit orbit{blocks[b], b, {}};
    for (const auto& m : reach[b]) {
      const std::size_t idx = block_index(m.block);
      if (covered[idx]) continue;
      covered[idx] = true;
      orbit.members.push_back(m);
    }
    out.orbits.push_back(std::move(orbit));
  }
  out.covers_all = std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
  return out;
}

bool same_partition(const std::vector<Orbit>& x, const std::vector<Orbit>& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].primitive != y[i].primitive || x[i].members.size() != y[i].members.size()) return false;
    for (std::size_t j = 0; j < x[i].members.size(); ++j)
      if (x[i].members[j].block != y[i].members[j].block) return false;
  }
  return true;
}

template <typename T>
T eliminate_determinant(std::vector<std::vector<T>> m) {
  const std::size_t n = m.size();
  T det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      T factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

}  // namespace

std::vector<BinaryBlock> enumerate_blocks() {
  std::vector<BinaryBlock> out;
  for (int code = 0; code < 16; ++code)
    out.push_back({(code >> 3) & 1, (code >> 2) & 1, (code >> 1) & 1, code & 1});
  return out;
}

std::size_t block_index(const BinaryBlock& block) {
  return static_cast<std::size_t>(block[0] * 8 + block[1] * 4 + block[2] * 2 + block[3]);
}

MultiSequence block_sequence(const BinaryBlock& block) {
  return MultiSequence::of(fibonacci_square_spec(), {block[0], block[1], block[2], block[3]});
}

std::optional<BinaryBlock> binary_window(const MultiSequence& mseq, Shift shift) {
  const auto w = mseq.window({shift.horizontal, shift.vertical}, {2, 2});
  BinaryBlock out{};
  for (std::size_t i = 0; i < 4; ++i) {
    const mpz_class& v = w[i].scalar().integer_value();
    if (v != 0 && v != 1) return std::nullopt;
    out[i] = static_cast<int>(v.get_si());
  }
  return out;
}

std::vector<Orbit> classify_orbits(std::uint64_t search_bound) {
  if (search_bound < 2) fail(Errc::InvalidArgument, "search bound must be >= 2");
  RawOrbits at = classify_at(search_bound);
  RawOrbits wider = classify_at(search_bound + 2);
  if (!at.covers_all || !same_partition(at.orbits, wider.orbits))
    fail(Errc::AmbiguousAtBound, "orbit partition is not stable at search bound " + std::to_string(search_bound));
  return at.orbits;
}

std::optional<std::string> primitive_label(const BinaryBlock& block) {
  static const std::array<std::pair<BinaryBlock, const char*>, 5> known{{
      {{0, 0, 0, 0}, "B_0"},
      {{1, 0, 0, 0}, "B_1"},
      {{0, 1, 1, 0}, "B_2"},
      {{1, 0, 0, 1}, "B_3"},
      {{1, 1, 1, 0}, "B_4"},
  }};
  for (const auto& [b, name] : known)
    if (b == block) return std::string(name);
  return std::nullopt;
}

std::string shift_name(Shift shift, const std::string& label) {
  auto power = [](const char* op, std::uint64_t e) -> std::string {
    if (e == 0) return "";
    if (e == 1) return op;
    return std::string(op) + "^" + std::to_string(e);
  };
  const std::string ops = power("H", shift.horizontal) + power("V", shift.vertical);
  return ops.empty() ? label : ops + "(" + label + ")";
}

std::string block_to_string(const BinaryBlock& block) {
  return std::to_string(block[2]) + " " + std::to_string(block[3]) + "\n" + std::to_string(block[0]) + " " +
         std::to_string(block[1]);
}

GenerationCertificate generation_certificate() {
  const MultiSequence b1 = block_sequence({1, 0, 0, 0});
  GenerationCertificate cert;
  for (const Shift s : {Shift{0, 0}, Shift{1, 0}, Shift{0, 1}, Shift{1, 1}}) {
    const auto w = b1.window({s.horizontal, s.vertical}, {2, 2});
    std::vector<mpz_class> row;
    for (std::size_t i = 0; i < 4; ++i) row.push_back(w[i].scalar().integer_value());
    cert.rows.push_back(std::move(row));
  }
  cert.determinant = integer_determinant(cert.rows);
  return cert;
}

std::vector<mpq_class> certificate_coordinates(const GenerationCertificate& cert, const BinaryBlock& target) {
  // Solve sum_r c_r rows[r][col] = target[col]: augmented system with rows^T.
  const std::size_t n = cert.rows.size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1));
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t r = 0; r < n; ++r) a[col][r] = cert.rows[r][col];
    a[col][n] = target[col];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) fail(Errc::NotInvertible, "certificate matrix is singular");
    std::swap(a[pivot], a[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      mpq_class factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  std::vector<mpq_class> out(n);
  for (std::size_t r = 0; r < n; ++r) out[r] = a[r][n] / a[r][r];
  return out;
}

mpz_class integer_determinant(std::vector<std::vector<mpz_class>> m) {
  // Bareiss: every intermediate division is exact.
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = v;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

mpq_class rational_determinant(std::vector<std::vector<mpq_class>> m) {
  return eliminate_determinant<mpq_class>(std::move(m));
}

bool positions_determine(const FibSpec& spec, const std::vector<Index>& positions) {
  const RingKind kind = spec.ring()->kind();
  if (kind != RingKind::Integer && kind != RingKind::Rational)
    fail(Errc::InvalidArgument, "positions_determine needs integer or rational coefficients");
  const std::size_t rank = spec.rank();
  if (positions.size() != rank)
    fail(Errc::InvalidArgument, "expected " + std::to_string(rank) + " positions, got " +
                                    std::to_string(positions.size()));
  std::set<Index> distinct(positions.begin(), positions.end());
  if (distinct.size() != positions.size()) fail(Errc::InvalidArgument, "positions must be distinct");

  auto as_rational = [](const Element& e) {
    return e.kind() == RingKind::Integer ? mpq_class(e.integer_value()) : e.rational_value();
  };
  const Shape orders = spec.orders();
  std::vector<std::vector<mpq_class>> m;
  for (const Index& pos : positions) {
    if (pos.size() != spec.dims()) fail(Errc::InvalidArgument, "position dimension does not match the spec");
    std::vector<std::vector<Element>> basis;
    for (std::size_t i = 0; i < spec.dims(); ++i) basis.push_back(basis_values(spec.axis(i), pos[i]));
    std::vector<mpq_class> row;
    Index j(spec.dims(), 0);
    for (std::size_t flat = 0; flat < rank; ++flat) {
      mpq_class w = 1;
      for (std::size_t i = 0; i < spec.dims(); ++i) w *= as_rational(basis[i][j[i]]);
      row.push_back(w);
      Hypercube<int>::increment(j, orders);
    }
    m.push_back(std::move(row));
  }
  return rational_determinant(std::move(m)) != 0;
}

}  // namespace fibmod
