#include "clones/monad.hpp"

#include <algorithm>
#include <stdexcept>

namespace clones {

namespace {

void check_anchor(const OpTable& op, const std::vector<int>& anchor, int set_size) {
  if (static_cast<int>(anchor.size()) != op.arity)
    throw std::invalid_argument("anchor length must equal the operation arity");
  if (set_size < 0) throw std::invalid_argument("set size must be nonnegative");
  for (int x : anchor)
    if (x < 0 || x >= set_size) throw std::invalid_argument("anchor entry outside the set");
}

void check_membership(const Theory& t, const OpTable& op) {
  if (op.carrier != t.carrier) throw std::invalid_argument("operation carrier mismatch");
  if (op.arity <= t.max_arity && !t.contains(op))
    throw std::invalid_argument("operation does not belong to the theory");
}

}  // namespace

FreeElement canonicalize(const Theory& t, const OpTable& op, const std::vector<int>& anchor,
                         int set_size) {
  check_anchor(op, anchor, set_size);
  check_membership(t, op);
  // Factor anchor = injection . surjection: the injection enumerates the
  // image in increasing order, the surjection sends each variable to the
  // rank of its anchor point.
  std::vector<int> image(anchor);
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  std::vector<int> surjection(anchor.size());
  for (std::size_t i = 0; i < anchor.size(); ++i)
    surjection[i] = static_cast<int>(
        std::lower_bound(image.begin(), image.end(), anchor[i]) - image.begin());
  FreeElement out;
  out.op = substitute_vars(op, surjection, static_cast<int>(image.size()));
  out.anchor = image;
  out.set_size = set_size;
  return out;
}

FreeElement full_support(const Theory& t, const FreeElement& e) {
  check_anchor(e.op, e.anchor, e.set_size);
  check_membership(t, e.op);
  FreeElement out;
  out.op = substitute_vars(e.op, e.anchor, e.set_size);
  out.anchor.resize(static_cast<std::size_t>(e.set_size));
  for (int i = 0; i < e.set_size; ++i) out.anchor[static_cast<std::size_t>(i)] = i;
  out.set_size = e.set_size;
  return out;
}

std::vector<FreeElement> monad_apply(const Theory& t, int set_size) {
  if (set_size < 0 || set_size > t.max_arity)
    throw std::invalid_argument("set size outside the theory arity bound");
  std::vector<FreeElement> out;
  std::vector<int> identity(static_cast<std::size_t>(set_size));
  for (int i = 0; i < set_size; ++i) identity[static_cast<std::size_t>(i)] = i;
  for (const OpTable& op : t.slice(set_size)) out.push_back({op, identity, set_size});
  return out;
}

FreeElement unit(const Theory& t, int set_size, int x) {
  if (x < 0 || x >= set_size) throw std::invalid_argument("unit point outside the set");
  return {projection(1, 0, t.carrier), {x}, set_size};
}

FreeElement map_element(const Theory& t, const std::vector<int>& f, int target_size,
                        const FreeElement& e) {
  if (static_cast<int>(f.size()) != e.set_size)
    throw std::invalid_argument("map table length must equal the source set size");
  std::vector<int> relabeled(e.anchor.size());
  for (std::size_t i = 0; i < e.anchor.size(); ++i)
    relabeled[i] = f[static_cast<std::size_t>(e.anchor[i])];
  return canonicalize(t, e.op, relabeled, target_size);
}

FreeElement mult(const Theory& t, const OpTable& outer, const std::vector<FreeElement>& args) {
  check_membership(t, outer);
  if (static_cast<int>(args.size()) != outer.arity)
    throw std::invalid_argument("mult argument count must equal the outer arity");
  if (args.empty()) throw std::invalid_argument("mult requires at least one argument value");
  const int set_size = args.front().set_size;
  std::vector<OpTable> inners;
  inners.reserve(args.size());
  for (const FreeElement& a : args) {
    if (a.set_size != set_size) throw std::invalid_argument("mult arguments over different sets");
    inners.push_back(full_support(t, a).op);
  }
  OpTable composed = superpose(outer, inners);
  std::vector<int> identity(static_cast<std::size_t>(set_size));
  for (int i = 0; i < set_size; ++i) identity[static_cast<std::size_t>(i)] = i;
  return canonicalize(t, composed, identity, set_size);
}

FreeElement kleisli_bind(const Theory& t, const FreeElement& e, const std::vector<FreeElement>& k,
                         int target_size) {
  if (static_cast<int>(k.size()) != e.set_size)
    throw std::invalid_argument("bind continuation must cover the source set");
  const FreeElement full = full_support(t, e);
  if (full.op.arity == 0) {
    // A constant uses no points; its value transports unchanged.
    return canonicalize(t, full.op, {}, target_size);
  }
  std::vector<OpTable> inners;
  inners.reserve(k.size());
  for (const FreeElement& v : k) {
    if (v.set_size != target_size)
      throw std::invalid_argument("bind continuation value over the wrong set");
    inners.push_back(full_support(t, v).op);
  }
  OpTable composed = superpose(full.op, inners);
  std::vector<int> identity(static_cast<std::size_t>(target_size));
  for (int i = 0; i < target_size; ++i) identity[static_cast<std::size_t>(i)] = i;
  return canonicalize(t, composed, identity, target_size);
}

FreeElement kock_kron1(const Theory& t, const FreeElement& a, const FreeElement& b) {
  const OpTable mu = full_support(t, a).op;
  const OpTable nu = full_support(t, b).op;
  const int paired = a.set_size * b.set_size;
  OpTable product = kron1(mu, nu);
  std::vector<int> identity(static_cast<std::size_t>(paired));
  for (int i = 0; i < paired; ++i) identity[static_cast<std::size_t>(i)] = i;
  return {std::move(product), std::move(identity), paired};
}

FreeElement kock_kron2(const Theory& t, const FreeElement& a, const FreeElement& b) {
  const OpTable mu = full_support(t, a).op;
  const OpTable nu = full_support(t, b).op;
  const int paired = a.set_size * b.set_size;
  OpTable product = kron2(mu, nu);
  std::vector<int> identity(static_cast<std::size_t>(paired));
  for (int i = 0; i < paired; ++i) identity[static_cast<std::size_t>(i)] = i;
  return {std::move(product), std::move(identity), paired};
}

bool monads_commute(const Theory& a, const Theory& b, int bound) {
  if (a.carrier != b.carrier) throw std::invalid_argument("monads_commute carrier mismatch");
  if (bound > a.max_arity || bound > b.max_arity)
    throw std::invalid_argument("monads_commute bound exceeds a theory arity bound");
  // The values from monad_apply carry identity anchors, so the two product
  // routes agree exactly when the product operation tables agree.
  for (int v = 0; v <= bound; ++v)
    for (int w = 0; w <= bound; ++w)
      for (const FreeElement& x : monad_apply(a, v))
        for (const FreeElement& y : monad_apply(b, w))
          if (kron1(x.op, y.op) != kron2(x.op, y.op)) return false;
  return true;
}

bool monad_is_commutative(const Theory& t, int bound) { return monads_commute(t, t, bound); }

}  // namespace clones
