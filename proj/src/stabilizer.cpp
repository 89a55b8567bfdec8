// Copyright 2026 The ravqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ravqe/stabilizer.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ravqe {

namespace {

struct Bits128 {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

// GF(2) rank by insertion into a basis keyed on the leading bit.
int gf2_rank(std::span<const Bits128> vectors) {
  std::array<Bits128, 128> basis{};
  std::array<bool, 128> used{};
  int rank = 0;
  for (Bits128 v : vectors) {
    while (v.lo || v.hi) {
      const int lead = v.hi ? 64 + (63 - std::countl_zero(v.hi)) : 63 - std::countl_zero(v.lo);
      if (!used[lead]) {
        used[lead] = true;
        basis[lead] = v;
        ++rank;
        break;
      }
      v.lo ^= basis[lead].lo;
      v.hi ^= basis[lead].hi;
    }
  }
  return rank;
}

// i^e X^x Z^z on two qubits; x and z use bit0 = a, bit1 = b.
struct Phased {
  int e = 0;
  std::uint8_t x = 0;
  std::uint8_t z = 0;
};

Phased multiply(const Phased& l, const Phased& r) {
  // Z^z1 X^x2 = (-1)^{z1 . x2} X^x2 Z^z1
  return {l.e + r.e + 2 * std::popcount(static_cast<unsigned>(l.z & r.x)), static_cast<std::uint8_t>(l.x ^ r.x),
          static_cast<std::uint8_t>(l.z ^ r.z)};
}

std::uint8_t x_part(Pauli2 p) { return static_cast<std::uint8_t>((p & 1) | ((p >> 1) & 2)); }
std::uint8_t z_part(Pauli2 p) { return static_cast<std::uint8_t>(((p >> 1) & 1) | ((p >> 2) & 2)); }
Pauli2 join(std::uint8_t x, std::uint8_t z) {
  return static_cast<Pauli2>((x & 1) | ((z & 1) << 1) | ((x & 2) << 1) | ((z & 2) << 2));
}

Phased hermitian(Pauli2 p, bool sign) {
  const std::uint8_t x = x_part(p), z = z_part(p);
  return {2 * (sign ? 1 : 0) + std::popcount(static_cast<unsigned>(x & z)), x, z};
}

int symplectic_form(Pauli2 u, Pauli2 v) {
  return (std::popcount(static_cast<unsigned>(x_part(u) & z_part(v))) +
          std::popcount(static_cast<unsigned>(z_part(u) & x_part(v)))) &
         1;
}

constexpr std::array<Pauli2, 4> kGenerators{0b0001, 0b0010, 0b0100, 0b1000};

Matrix4 matmul(const Matrix4& a, const Matrix4& b) {
  Matrix4 c{};
  for (int r = 0; r < 4; ++r)
    for (int k = 0; k < 4; ++k)
      for (int s = 0; s < 4; ++s) c[r][s] += a[r][k] * b[k][s];
  return c;
}

}  // namespace

bool commutes(const PauliRow& a, const PauliRow& b) {
  return ((std::popcount(a.x & b.z) + std::popcount(a.z & b.x)) & 1) == 0;
}

StabilizerTableau::StabilizerTableau(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxTableauQubits) throw std::invalid_argument("tableau: bad qubit count");
  rows_.resize(n_qubits);
  for (int q = 0; q < n_qubits; ++q) rows_[q] = {0, std::uint64_t{1} << q, false};
}

StabilizerTableau::StabilizerTableau(int n_qubits, std::vector<PauliRow> rows)
    : n_qubits_(n_qubits), rows_(std::move(rows)) {
  if (n_qubits < 1 || n_qubits > kMaxTableauQubits) throw std::invalid_argument("tableau: bad qubit count");
  if (rows_.size() != static_cast<std::size_t>(n_qubits))
    throw std::invalid_argument("tableau: need exactly n generators");
}

bool StabilizerTableau::is_valid() const {
  std::vector<Bits128> v;
  v.reserve(rows_.size());
  for (const auto& r : rows_) v.push_back({r.x, r.z});
  if (gf2_rank(v) != n_qubits_) return false;
  for (std::size_t a = 0; a < rows_.size(); ++a)
    for (std::size_t b = a + 1; b < rows_.size(); ++b)
      if (!commutes(rows_[a], rows_[b])) return false;
  return true;
}

StabilizerTableau init_singlet_tableau(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("init_singlet_tableau: n must be even");
  std::vector<PauliRow> rows;
  for (int k = 0; k < n / 2; ++k) {
    const std::uint64_t pair = (std::uint64_t{1} << (2 * k)) | (std::uint64_t{1} << (2 * k + 1));
    rows.push_back({pair, 0, true});
    rows.push_back({0, pair, true});
  }
  return StabilizerTableau(n, std::move(rows));
}

TwoQubitClifford::TwoQubitClifford() : images_(kGenerators), signs_{} { build_table(); }

TwoQubitClifford::TwoQubitClifford(std::array<Pauli2, 4> images, std::array<bool, 4> signs)
    : images_(images), signs_(signs) {
  if (!is_symplectic()) throw std::invalid_argument("TwoQubitClifford: images are not symplectic");
  build_table();
}

void TwoQubitClifford::build_table() {
  for (Pauli2 u = 0; u < 16; ++u) {
    const std::uint8_t ux = x_part(u), uz = z_part(u);
    Phased acc{std::popcount(static_cast<unsigned>(ux & uz)), 0, 0};
    for (int g = 0; g < 4; ++g) {
      if (u & kGenerators[g]) acc = multiply(acc, hermitian(images_[g], signs_[g]));
    }
    const int residue = ((acc.e - std::popcount(static_cast<unsigned>(acc.x & acc.z))) % 4 + 4) % 4;
    if (residue % 2 != 0) throw std::logic_error("TwoQubitClifford: non-Hermitian image");
    table_bits_[u] = join(acc.x, acc.z);
    table_sign_[u] = residue == 2;
  }
}

bool TwoQubitClifford::is_symplectic() const {
  for (int k = 0; k < 4; ++k)
    for (int l = 0; l < 4; ++l)
      if (symplectic_form(images_[k], images_[l]) != symplectic_form(kGenerators[k], kGenerators[l]))
        return false;
  return true;
}

TwoQubitClifford TwoQubitClifford::inverse() const {
  std::array<Pauli2, 4> inv_images{};
  std::array<bool, 4> inv_signs{};
  for (int k = 0; k < 4; ++k) {
    for (Pauli2 u = 0; u < 16; ++u) {
      if (table_bits_[u] == kGenerators[k]) {
        // C(u) = (-1)^s g_k  =>  C^{-1}(g_k) = (-1)^s u
        inv_images[k] = u;
        inv_signs[k] = table_sign_[u];
        break;
      }
    }
  }
  return TwoQubitClifford(inv_images, inv_signs);
}

Matrix4 pauli2_matrix(Pauli2 p, bool sign) {
  using M2 = std::array<std::array<cplx, 2>, 2>;
  auto single = [](bool x, bool z) -> M2 {
    if (x && z) return {{{0, cplx{0, -1}}, {cplx{0, 1}, 0}}};
    if (x) return {{{0, 1}, {1, 0}}};
    if (z) return {{{1, 0}, {0, -1}}};
    return {{{1, 0}, {0, 1}}};
  };
  const M2 a = single(p & 1, p & 2);
  const M2 b = single(p & 4, p & 8);
  const double s = sign ? -1.0 : 1.0;
  Matrix4 m{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m[r][c] = s * a[r >> 1][c >> 1] * b[r & 1][c & 1];
  return m;
}

Matrix4 TwoQubitClifford::unitary() const {
  // U|00> spans the joint +1 eigenspace of C(Z_a) and C(Z_b); then
  // U|ab> = C(X_a)^a C(X_b)^b U|00>.
  Matrix4 proj{};
  const Matrix4 za = pauli2_matrix(images_[1], signs_[1]);
  const Matrix4 zb = pauli2_matrix(images_[3], signs_[3]);
  Matrix4 ia = za, ib = zb;
  for (int d = 0; d < 4; ++d) {
    ia[d][d] += 1.0;
    ib[d][d] += 1.0;
  }
  proj = matmul(ia, ib);

  int best = 0;
  double best_norm = -1.0;
  for (int c = 0; c < 4; ++c) {
    double nrm = 0.0;
    for (int r = 0; r < 4; ++r) nrm += std::norm(proj[r][c]);
    if (nrm > best_norm) {
      best_norm = nrm;
      best = c;
    }
  }
  std::array<cplx, 4> phi0{};
  for (int r = 0; r < 4; ++r) phi0[r] = proj[r][best] / std::sqrt(best_norm);

  const Matrix4 xa = pauli2_matrix(images_[0], signs_[0]);
  const Matrix4 xb = pauli2_matrix(images_[2], signs_[2]);
  auto apply = [](const Matrix4& m, const std::array<cplx, 4>& v) {
    std::array<cplx, 4> out{};
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) out[r] += m[r][c] * v[c];
    return out;
  };

  Matrix4 u{};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      std::array<cplx, 4> v = phi0;
      if (b) v = apply(xb, v);
      if (a) v = apply(xa, v);
      for (int r = 0; r < 4; ++r) u[r][2 * a + b] = v[r];
    }
  }
  return u;
}

const std::vector<std::array<Pauli2, 4>>& symplectic_group_4() {
  static const std::vector<std::array<Pauli2, 4>> group = [] {
    std::vector<std::array<Pauli2, 4>> out;
    for (unsigned code = 0; code < (1u << 16); ++code) {
      const std::array<Pauli2, 4> images{static_cast<Pauli2>(code >> 12), static_cast<Pauli2>((code >> 8) & 15),
                                         static_cast<Pauli2>((code >> 4) & 15), static_cast<Pauli2>(code & 15)};
      bool ok = true;
      for (int k = 0; k < 4 && ok; ++k)
        for (int l = 0; l < 4 && ok; ++l)
          ok = symplectic_form(images[k], images[l]) == symplectic_form(kGenerators[k], kGenerators[l]);
      if (ok) out.push_back(images);
    }
    return out;
  }();
  return group;
}

TwoQubitClifford sample_two_qubit_clifford(std::mt19937_64& rng) {
  const auto& group = symplectic_group_4();
  std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
  const std::size_t idx = pick(rng);
  std::uniform_int_distribution<int> bits(0, 15);
  const int s = bits(rng);
  return TwoQubitClifford(group[idx], {bool(s & 1), bool(s & 2), bool(s & 4), bool(s & 8)});
}

std::size_t symplectic_index(const TwoQubitClifford& c) {
  const auto& group = symplectic_group_4();
  const auto it = std::lower_bound(group.begin(), group.end(), c.images());
  if (it == group.end() || *it != c.images()) throw std::logic_error("symplectic_index: not a group element");
  return static_cast<std::size_t>(it - group.begin());
}

void apply_clifford(StabilizerTableau& tableau, const TwoQubitClifford& element, int i, int j) {
  const int n = tableau.n_qubits();
  if (i == j) throw std::invalid_argument("apply_clifford: sites must differ");
  if (i < 0 || j < 0 || i >= n || j >= n) throw std::out_of_range("apply_clifford: site out of range");
  const std::uint64_t bi = std::uint64_t{1} << i;
  const std::uint64_t bj = std::uint64_t{1} << j;
  for (PauliRow& row : tableau.rows()) {
    const Pauli2 u = static_cast<Pauli2>(((row.x & bi) ? 1 : 0) | ((row.z & bi) ? 2 : 0) |
                                         ((row.x & bj) ? 4 : 0) | ((row.z & bj) ? 8 : 0));
    if (u == 0) continue;
    const Pauli2 v = element.image_bits(u);
    row.sign ^= element.image_sign(u);
    row.x = (row.x & ~(bi | bj)) | ((v & 1) ? bi : 0) | ((v & 4) ? bj : 0);
    row.z = (row.z & ~(bi | bj)) | ((v & 2) ? bi : 0) | ((v & 8) ? bj : 0);
  }
}

int tableau_entropy(const StabilizerTableau& tableau, std::uint64_t region) {
  const int n = tableau.n_qubits();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  if (region == 0 || (region & all) == all) throw std::invalid_argument("tableau_entropy: region must be a proper subset");
  if (region & ~all) throw std::out_of_range("tableau_entropy: region outside register");
  std::vector<Bits128> restricted;
  restricted.reserve(tableau.rows().size());
  for (const auto& r : tableau.rows()) restricted.push_back({r.x & region, r.z & region});
  return gf2_rank(restricted) - std::popcount(region);
}

int tableau_entropy(const StabilizerTableau& tableau, int begin, int end) {
  if (begin < 0 || end > tableau.n_qubits() || begin >= end)
    throw std::invalid_argument("tableau_entropy: empty or out-of-range region");
  std::uint64_t mask = 0;
  for (int q = begin; q < end; ++q) mask |= std::uint64_t{1} << q;
  return tableau_entropy(tableau, mask);
}

}  // namespace ravqe
