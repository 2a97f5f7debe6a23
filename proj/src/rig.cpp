#include "clones/rig.hpp"

#include <set>
#include <stdexcept>

namespace clones {

namespace {

std::string element_name(const Rig& r, int x) {
  if (!r.labels.empty()) return r.labels[static_cast<std::size_t>(x)];
  return std::to_string(x);
}

bool tables_well_shaped(const Rig& r) {
  if (r.size < 1) return false;
  auto shaped = [&](const std::vector<std::vector<int>>& t) {
    if (static_cast<int>(t.size()) != r.size) return false;
    for (const auto& row : t) {
      if (static_cast<int>(row.size()) != r.size) return false;
      for (int v : row)
        if (v < 0 || v >= r.size) return false;
    }
    return true;
  };
  return shaped(r.add) && shaped(r.mul) && r.zero >= 0 && r.zero < r.size && r.one >= 0 &&
         r.one < r.size;
}

}  // namespace

std::string RigViolation::render(const Rig& r) const {
  std::string out = axiom + " at (";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) out += ", ";
    out += element_name(r, witness[i]);
  }
  return out + ")";
}

std::vector<RigViolation> check_rig_axioms(const Rig& r) {
  if (!tables_well_shaped(r)) throw std::invalid_argument("rig tables are not well-shaped");
  std::vector<RigViolation> out;
  const int n = r.size;
  for (int a = 0; a < n; ++a) {
    if (r.add[r.zero][a] != a || r.add[a][r.zero] != a)
      out.push_back({"additive identity", {a}});
    if (r.mul[r.one][a] != a || r.mul[a][r.one] != a)
      out.push_back({"multiplicative identity", {a}});
    if (r.mul[r.zero][a] != r.zero || r.mul[a][r.zero] != r.zero)
      out.push_back({"zero absorption", {a}});
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (r.add[a][b] != r.add[b][a]) out.push_back({"additive commutativity", {a, b}});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (r.add[r.add[a][b]][c] != r.add[a][r.add[b][c]])
          out.push_back({"additive associativity", {a, b, c}});
        if (r.mul[r.mul[a][b]][c] != r.mul[a][r.mul[b][c]])
          out.push_back({"multiplicative associativity", {a, b, c}});
        if (r.mul[a][r.add[b][c]] != r.add[r.mul[a][b]][r.mul[a][c]])
          out.push_back({"left distributivity", {a, b, c}});
        if (r.mul[r.add[a][b]][c] != r.add[r.mul[a][c]][r.mul[b][c]])
          out.push_back({"right distributivity", {a, b, c}});
      }
  if (!r.labels.empty()) {
    if (static_cast<int>(r.labels.size()) != r.size)
      out.push_back({"label count", {}});
    std::set<std::string> seen(r.labels.begin(), r.labels.end());
    if (static_cast<int>(seen.size()) != static_cast<int>(r.labels.size()))
      out.push_back({"label distinctness", {}});
  }
  return out;
}

void validate_rig(const Rig& r) {
  const auto violations = check_rig_axioms(r);
  if (!violations.empty())
    throw std::invalid_argument("invalid rig: " + violations.front().render(r));
}

bool is_ring(const Rig& r) {
  for (int a = 0; a < r.size; ++a) {
    bool inverted = false;
    for (int b = 0; b < r.size; ++b)
      if (r.add[a][b] == r.zero) inverted = true;
    if (!inverted) return false;
  }
  return true;
}

bool mul_commutative(const Rig& r) {
  for (int a = 0; a < r.size; ++a)
    for (int b = 0; b < r.size; ++b)
      if (r.mul[a][b] != r.mul[b][a]) return false;
  return true;
}

Rig opposite(const Rig& r) {
  Rig o = r;
  for (int a = 0; a < r.size; ++a)
    for (int b = 0; b < r.size; ++b) o.mul[a][b] = r.mul[b][a];
  return o;
}

namespace {

Rig z_mod(int n) {
  Rig r{n, {}, {}, 0, 1, {}};
  r.add.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  r.mul = r.add;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      r.add[a][b] = (a + b) % n;
      r.mul[a][b] = (a * b) % n;
    }
  return r;
}

Rig bool2_rig() {
  Rig r{2, {{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}, 0, 1, {}};
  return r;
}

Rig f4_rig() {
  // Elements 0, 1, w, w+1 as 0..3; addition is xor, w*w = w+1.
  Rig r{4, {}, {}, 0, 1, {}};
  r.add.assign(4, std::vector<int>(4));
  r.mul.assign(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) r.add[a][b] = a ^ b;
  auto times = [](int a, int b) {
    if (a == 0 || b == 0) return 0;
    if (a == 1) return b;
    if (b == 1) return a;
    if (a == 2 && b == 2) return 3;
    if (a == 3 && b == 3) return 2;
    return 1;  // w * (w+1)
  };
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) r.mul[a][b] = times(a, b);
  return r;
}

Rig ut2_f2_rig() {
  // Upper-triangular [[a, b], [0, d]] over the 2-element field, encoded
  // a + 2b + 4d. Multiplication composes matrices.
  Rig r{8, {}, {}, 0, 5, {}};
  r.add.assign(8, std::vector<int>(8));
  r.mul.assign(8, std::vector<int>(8));
  auto enc = [](int a, int b, int d) { return a + 2 * b + 4 * d; };
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int a = x & 1, b = (x >> 1) & 1, d = (x >> 2) & 1;
      const int a2 = y & 1, b2 = (y >> 1) & 1, d2 = (y >> 2) & 1;
      r.add[x][y] = enc(a ^ a2, b ^ b2, d ^ d2);
      r.mul[x][y] = enc(a & a2, (a & b2) ^ (b & d2), d & d2);
    }
  return r;
}

}  // namespace

Rig builtin_rig(const std::string& name) {
  if (name == "Z2") return z_mod(2);
  if (name == "Z3") return z_mod(3);
  if (name == "Z4") return z_mod(4);
  if (name == "bool2") return bool2_rig();
  if (name == "F4") return f4_rig();
  if (name == "UT2_F2") return ut2_f2_rig();
  throw std::invalid_argument("unknown builtin rig: " + name);
}

std::vector<std::string> builtin_rig_names() {
  return {"Z2", "Z3", "Z4", "bool2", "F4", "UT2_F2"};
}

int rig_sum(const Rig& r, const std::vector<int>& xs) {
  int acc = r.zero;
  for (int x : xs) acc = rig_add(r, acc, x);
  return acc;
}

RMatrix matrix_kronecker(const Rig& r, const RMatrix& x, const RMatrix& y) {
  const int jp = x.rows, j = x.cols, kp = y.rows, k = y.cols;
  RMatrix out{jp * kp, j * k, std::vector<int>(static_cast<std::size_t>(jp * kp) * (j * k))};
  for (int ip = 0; ip < jp; ++ip)
    for (int lp = 0; lp < kp; ++lp)
      for (int i = 0; i < j; ++i)
        for (int l = 0; l < k; ++l)
          out.entries[static_cast<std::size_t>(ip * kp + lp) * (j * k) + (i * k + l)] =
              rig_mul(r, y.at(lp, l), x.at(ip, i));
  return out;
}

}  // namespace clones
