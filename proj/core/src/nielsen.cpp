#include "splitjac/nielsen.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

namespace splitjac {

Perm NielsenTuple::product() const {
  if (sigma.empty()) return Perm();
  Perm p(sigma[0].n());
  for (const Perm& s : sigma) p = p * s;
  return p;
}

bool NielsenTuple::is_product_one() const { return product().is_identity(); }

bool NielsenTuple::is_transitive() const {
  if (sigma.empty()) return false;
  const int n = sigma[0].n();
  uint32_t seen = 1u;
  std::array<int, Perm::kMaxN> stack;
  int top = 0, count = 1;
  stack[static_cast<size_t>(top++)] = 0;
  while (top > 0) {
    int x = stack[static_cast<size_t>(--top)];
    for (const Perm& s : sigma) {
      int y = s[x];
      if (!(seen >> y & 1u)) {
        seen |= 1u << y;
        stack[static_cast<size_t>(top++)] = y;
        ++count;
      }
    }
  }
  return count == n;
}

std::vector<std::vector<int>> NielsenTuple::cycle_types() const {
  std::vector<std::vector<int>> out;
  out.reserve(sigma.size());
  for (const Perm& s : sigma) out.push_back(s.cycle_type());
  return out;
}

std::string NielsenTuple::key() const {
  std::string k;
  k.reserve(sigma.size() * static_cast<size_t>(n()));
  for (const Perm& s : sigma)
    for (int i = 0; i < s.n(); ++i) k.push_back(static_cast<char>(s[i]));
  return k;
}

NielsenTuple NielsenTuple::from_key(int n, size_t r, const std::string& key) {
  if (key.size() != r * static_cast<size_t>(n))
    throw std::invalid_argument("tuple key has wrong length");
  NielsenTuple t;
  t.sigma.reserve(r);
  for (size_t p = 0; p < r; ++p) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      img[static_cast<size_t>(i)] =
          static_cast<unsigned char>(key[p * static_cast<size_t>(n) + static_cast<size_t>(i)]);
    t.sigma.push_back(Perm::from_images(img));
  }
  return t;
}

std::vector<std::vector<int>> parse_cycle_types(const std::string& text) {
  std::vector<std::vector<int>> types;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    std::vector<int> type;
    size_t p = 0;
    while (p < item.size()) {
      size_t q = p;
      while (q < item.size() && item[q] != '.') ++q;
      std::string part = item.substr(p, q - p);
      size_t caret = part.find('^');
      int len = 0, rep = 1;
      try {
        len = std::stoi(part.substr(0, caret));
        if (caret != std::string::npos) rep = std::stoi(part.substr(caret + 1));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad cycle-type part '" + part + "'");
      }
      if (len < 1 || rep < 1)
        throw std::invalid_argument("bad cycle-type part '" + part + "'");
      for (int i = 0; i < rep; ++i) type.push_back(len);
      p = q + 1;
    }
    if (type.empty()) throw std::invalid_argument("empty cycle type in '" + text + "'");
    types.push_back(std::move(type));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (types.empty()) throw std::invalid_argument("no cycle types in '" + text + "'");
  return types;
}

std::string cycle_types_to_string(const std::vector<std::vector<int>>& types) {
  std::string out;
  for (size_t i = 0; i < types.size(); ++i) {
    if (i) out.push_back(',');
    size_t j = 0;
    bool first = true;
    while (j < types[i].size()) {
      size_t k = j;
      while (k < types[i].size() && types[i][k] == types[i][j]) ++k;
      if (!first) out.push_back('.');
      first = false;
      out += std::to_string(types[i][j]);
      if (k - j > 1) out += "^" + std::to_string(k - j);
      j = k;
    }
  }
  return out;
}

namespace {

struct TypeData {
  Perm base;
  std::vector<Perm> centralizer;
};

const TypeData& type_data(int n, const std::vector<int>& type) {
  thread_local std::map<std::pair<int, uint64_t>, TypeData> cache;
  const uint64_t sig = type_signature_of(n, type);
  auto it = cache.find({n, sig});
  if (it == cache.end()) {
    TypeData td;
    td.base = base_of_type(n, type);
    td.centralizer = centralizer_elements(td.base);
    it = cache.emplace(std::make_pair(n, sig), std::move(td)).first;
  }
  return it->second;
}

}  // namespace

NielsenTuple canonical_form(const NielsenTuple& t) {
  if (t.sigma.empty()) return t;
  const size_t r = t.r();
  const TypeData& td = type_data(t.n(), t.sigma[0].cycle_type());
  const Perm h = conjugator(t.sigma[0], td.base);
  std::vector<Perm> pinned;
  pinned.reserve(r);
  for (const Perm& s : t.sigma) pinned.push_back(s.conjugated_by(h));
  // pinned[0] == base for every candidate below; minimize positions 1..r-1
  // over the centralizer of the base.
  std::vector<Perm> best(pinned.begin(), pinned.end());
  std::vector<Perm> scratch(r);
  for (const Perm& g : td.centralizer) {
    int rel = 0;
    for (size_t pos = 1; pos < r; ++pos) {
      scratch[pos] = pinned[pos].conjugated_by(g);
      if (rel == 0) {
        if (scratch[pos] < best[pos]) {
          rel = -1;
        } else if (best[pos] < scratch[pos]) {
          rel = 1;
          break;
        }
      }
    }
    if (rel == -1)
      for (size_t pos = 1; pos < r; ++pos) best[pos] = scratch[pos];
  }
  NielsenTuple out;
  out.sigma = std::move(best);
  return out;
}

NielsenTuple hurwitz_move(const NielsenTuple& t, size_t i) {
  if (i + 1 >= t.r()) throw std::out_of_range("braid move index");
  NielsenTuple u = t;
  u.sigma[i] = t.sigma[i] * t.sigma[i + 1] * t.sigma[i].inverse();
  u.sigma[i + 1] = t.sigma[i];
  return u;
}

NielsenTuple hurwitz_move_inverse(const NielsenTuple& t, size_t i) {
  if (i + 1 >= t.r()) throw std::out_of_range("braid move index");
  NielsenTuple u = t;
  u.sigma[i] = t.sigma[i + 1];
  u.sigma[i + 1] = t.sigma[i + 1].inverse() * t.sigma[i] * t.sigma[i + 1];
  return u;
}

EnumerationResult enumerate_nielsen(int n,
                                    const std::vector<std::vector<int>>& cycle_types,
                                    int threads) {
  if (n < 1 || n > Perm::kMaxN) throw std::domain_error("degree out of range");
  if (cycle_types.size() < 3) throw std::domain_error("need at least 3 branch points");
  if (threads < 1) threads = 1;
  EnumerationResult res;

  // Fixed points may be left implicit; pad each type with 1-cycles up to n.
  std::vector<std::vector<int>> types(cycle_types);
  for (auto& type : types) {
    int sum = 0;
    for (int len : type) {
      if (len < 1) throw std::invalid_argument("cycle lengths must be positive");
      sum += len;
    }
    if (sum > n) throw std::invalid_argument("cycle type is not a partition of n");
    for (; sum < n; ++sum) type.push_back(1);
  }

  int odd_signs = 0;
  for (const auto& type : types) {
    type_signature_of(n, type);  // validates the partition
    odd_signs += (n - static_cast<int>(type.size())) % 2;
  }
  if (odd_signs % 2 != 0) {
    res.diagnostic =
        "infeasible cycle types: the signs of the classes multiply to -1, "
        "so no product-one tuple exists";
    return res;
  }

  const size_t r = types.size();
  const Perm s1 = base_of_type(n, types[0]);
  std::vector<std::vector<Perm>> pool;  // classes for positions 1..r-2
  for (size_t i = 1; i + 1 < r; ++i) pool.push_back(elements_of_type(n, types[i]));
  const uint64_t last_sig = type_signature_of(n, types[r - 1]);

  const size_t outer = pool.front().size();
  const size_t nthreads = std::min<size_t>(static_cast<size_t>(threads), outer);
  std::vector<std::set<std::string>> found(nthreads);
  std::vector<uint64_t> examined(nthreads, 0);

  auto worker = [&](size_t wi, size_t lo, size_t hi) {
    std::vector<const Perm*> chosen(pool.size(), nullptr);
    std::set<std::string>& out = found[wi];
    uint64_t local_examined = 0;
    std::function<void(size_t, const Perm&)> descend = [&](size_t level,
                                                           const Perm& partial) {
      if (level == pool.size()) {
        ++local_examined;
        if (partial.type_signature() != last_sig) return;
        NielsenTuple t;
        t.sigma.reserve(r);
        t.sigma.push_back(s1);
        for (const Perm* p : chosen) t.sigma.push_back(*p);
        t.sigma.push_back(partial.inverse());
        if (!t.is_transitive()) return;
        out.insert(canonical_form(t).key());
        return;
      }
      const auto& cls = pool[level];
      const size_t begin = level == 0 ? lo : 0;
      const size_t end = level == 0 ? hi : cls.size();
      for (size_t idx = begin; idx < end; ++idx) {
        chosen[level] = &cls[idx];
        descend(level + 1, partial * cls[idx]);
      }
    };
    descend(0, s1);
    examined[wi] = local_examined;
  };

  if (nthreads == 1) {
    worker(0, 0, outer);
  } else {
    std::vector<std::thread> ts;
    size_t chunk = (outer + nthreads - 1) / nthreads;
    for (size_t wi = 0; wi < nthreads; ++wi) {
      size_t lo = wi * chunk, hi = std::min(outer, lo + chunk);
      ts.emplace_back(worker, wi, lo, hi);
    }
    for (auto& th : ts) th.join();
  }

  std::set<std::string> all;
  for (auto& s : found) all.merge(s);
  for (uint64_t e : examined) res.tuples_examined += e;
  res.classes.reserve(all.size());
  for (const auto& k : all) res.classes.push_back(NielsenTuple::from_key(n, r, k));
  return res;
}

namespace {

std::vector<uint64_t> ordered_signature(const NielsenTuple& t) {
  std::vector<uint64_t> v;
  v.reserve(t.r());
  for (const Perm& s : t.sigma) v.push_back(s.type_signature());
  return v;
}

}  // namespace

std::vector<BraidOrbit> braid_orbits(const std::vector<NielsenTuple>& classes) {
  std::vector<BraidOrbit> orbits;
  if (classes.empty()) return orbits;
  const int n = classes[0].n();
  const size_t r = classes[0].r();
  if (r < 2) throw std::domain_error("braid moves need at least 2 entries");

  auto ref = ordered_signature(classes[0]);
  std::sort(ref.begin(), ref.end());
  for (const auto& t : classes) {
    auto sig = ordered_signature(t);
    std::sort(sig.begin(), sig.end());
    if (t.n() != n || t.r() != r || sig != ref)
      throw std::domain_error("tuples mix degrees, lengths or cycle-type multisets");
  }

  std::map<std::string, NielsenTuple> input;
  for (const auto& t : classes) {
    NielsenTuple c = canonical_form(t);
    std::string k = c.key();
    input.emplace(std::move(k), std::move(c));
  }

  std::set<std::string> consumed;
  for (const auto& [seed_key, seed] : input) {
    if (consumed.count(seed_key)) continue;
    const auto seed_sig = ordered_signature(seed);
    std::set<std::string> orbit_keys{seed_key};
    std::vector<NielsenTuple> frontier{seed};
    while (!frontier.empty()) {
      std::vector<NielsenTuple> next;
      for (const auto& t : frontier) {
        for (size_t i = 0; i + 1 < r; ++i) {
          for (int dir = 0; dir < 2; ++dir) {
            NielsenTuple nb = canonical_form(dir == 0 ? hurwitz_move(t, i)
                                                      : hurwitz_move_inverse(t, i));
            std::string k = nb.key();
            if (orbit_keys.insert(std::move(k)).second) next.push_back(std::move(nb));
          }
        }
      }
      frontier = std::move(next);
    }
    BraidOrbit o;
    o.total_classes = orbit_keys.size();
    o.seed_signature = seed_sig;
    o.members.reserve(orbit_keys.size());
    for (const auto& k : orbit_keys) {
      NielsenTuple m = NielsenTuple::from_key(n, r, k);
      if (ordered_signature(m) == seed_sig) ++o.length;
      if (input.count(k)) consumed.insert(k);
      o.members.push_back(std::move(m));
    }
    o.representative = o.members.front();
    o.group_order = group_order(o.representative.sigma);
    orbits.push_back(std::move(o));
  }
  std::sort(orbits.begin(), orbits.end(), [](const BraidOrbit& a, const BraidOrbit& b) {
    return a.representative.key() < b.representative.key();
  });
  return orbits;
}

uint64_t group_order(const NielsenTuple& t) { return group_order(t.sigma); }

namespace {

NielsenTuple apply_word(const NielsenTuple& t, const std::vector<int>& word) {
  NielsenTuple cur = t;
  for (int m : word) {
    if (m == 0) throw std::invalid_argument("zero entry in braid word");
    cur = m > 0 ? hurwitz_move(cur, static_cast<size_t>(m - 1))
                : hurwitz_move_inverse(cur, static_cast<size_t>(-m - 1));
  }
  return cur;
}

}  // namespace

const BraidWordTriple& genus_convention() {
  static const BraidWordTriple w{{3, 2, 1, 1, -2, -3}, {3, 2, 2, -3}, {3, 3}};
  return w;
}

ReducedActionReport reduced_action(const BraidOrbit& o, const BraidWordTriple& w) {
  if (o.members.empty()) throw std::domain_error("empty orbit");
  if (o.members[0].r() != 4)
    throw std::domain_error("reduced action needs exactly 4 branch points");
  if (o.seed_signature.size() != 4)
    throw std::domain_error("orbit is missing its seed signature");

  // the fiber: members carrying the seed ordered signature
  std::vector<const NielsenTuple*> fiber;
  for (const auto& m : o.members)
    if (ordered_signature(m) == o.seed_signature) fiber.push_back(&m);
  const uint32_t L = static_cast<uint32_t>(fiber.size());
  std::map<std::string, uint32_t> index;
  for (uint32_t i = 0; i < L; ++i) index.emplace(fiber[i]->key(), i);

  ReducedActionReport rep;
  rep.reduced_count = L;
  rep.well_defined = true;

  const std::vector<int>* words[3] = {&w.gamma0, &w.gamma1, &w.gamma_inf};
  std::array<std::vector<uint32_t>, 3> gamma;
  for (size_t g = 0; g < 3; ++g) {
    auto& gp = gamma[g];
    gp.assign(L, UINT32_MAX);
    for (uint32_t i = 0; i < L; ++i) {
      const NielsenTuple moved = canonical_form(apply_word(*fiber[i], *words[g]));
      auto it = index.find(moved.key());
      if (it == index.end()) {
        // the word changed the ordered signature, so it is not a valid
        // convention for this fiber
        rep.well_defined = false;
        return rep;
      }
      gp[i] = it->second;
    }
    std::vector<bool> hit(L, false);
    for (uint32_t v : gp) {
      if (hit[v]) {
        rep.well_defined = false;
        return rep;
      }
      hit[v] = true;
    }
  }

  auto cycles_of = [&](const std::vector<uint32_t>& gp) {
    std::vector<bool> seen(L, false);
    uint64_t c = 0;
    for (uint32_t i = 0; i < L; ++i) {
      if (seen[i]) continue;
      ++c;
      for (uint32_t j = i; !seen[j]; j = gp[j]) seen[j] = true;
    }
    return c;
  };
  for (size_t g = 0; g < 3; ++g) rep.cycle_counts[g] = cycles_of(gamma[g]);

  // joint connectivity of the fiber under the three bijections
  {
    std::vector<uint32_t> comp(L, UINT32_MAX);
    for (uint32_t i = 0; i < L; ++i) {
      if (comp[i] != UINT32_MAX) continue;
      std::vector<uint32_t> stack{i};
      comp[i] = i;
      while (!stack.empty()) {
        const uint32_t v = stack.back();
        stack.pop_back();
        for (const auto& gp : gamma)
          if (comp[gp[v]] == UINT32_MAX) {
            comp[gp[v]] = i;
            stack.push_back(gp[v]);
          }
      }
      ++rep.components;
    }
  }

  auto is_identity_product = [&](size_t a, size_t b, size_t c) {
    for (uint32_t i = 0; i < L; ++i)
      if (gamma[c][gamma[b][gamma[a][i]]] != i) return false;
    return true;
  };
  rep.product_one = is_identity_product(0, 1, 2) || is_identity_product(1, 2, 0) ||
                    is_identity_product(2, 0, 1);

  if (rep.product_one) {
    uint64_t ind_sum = 0;
    for (auto c : rep.cycle_counts) ind_sum += L - c;
    // 2 - 2g = 2L - sum ind(gamma)
    long long g2 = static_cast<long long>(ind_sum) - 2ll * static_cast<long long>(L) + 2ll;
    if (g2 % 2 == 0 && g2 >= 0) rep.genus = static_cast<int>(g2 / 2);
  }
  return rep;
}

int orbit_genus(const BraidOrbit& o) {
  ReducedActionReport rep = reduced_action(o, genus_convention());
  if (!rep.well_defined)
    throw std::runtime_error("mapping-class words do not act on the signature fiber");
  if (!rep.product_one)
    throw std::runtime_error("mapping-class actions violate the product relation");
  if (rep.components != 1)
    throw std::runtime_error("signature fiber is disconnected under the actions");
  if (rep.genus < 0) throw std::runtime_error("genus formula gave a non-integer");
  return rep.genus;
}

}  // namespace splitjac
