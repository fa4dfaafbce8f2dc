#include "gact/generic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

#include "gact/error.hpp"

namespace gact {

std::string_view theory_name(Theory t) noexcept { return t == Theory::Empty ? "empty" : "graph"; }

Theory parse_theory(std::string_view s) {
  if (s == "empty") return Theory::Empty;
  if (s == "graph") return Theory::Graph;
  throw Error(Errc::InvalidArgument, "unknown theory '" + std::string(s) + "'");
}

Signature theory_signature(Theory t) noexcept { return t == Theory::Empty ? Signature::Empty : Signature::Graph; }

SaturationState initial_state(Signature sig, GroupPtr group) {
  return SaturationState{GStructure::empty(sig, std::move(group)), 0, {}, {}, false};
}

SaturationState state_from(GStructure m) {
  std::vector<int> births(static_cast<std::size_t>(m.size()), 0);
  return SaturationState{std::move(m), 0, std::move(births), {}, false};
}

namespace {

template <class View>
Entry entry_of(const View& m, int u, int v) {
  if (u == v) return Entry::Eq;
  return m.related(u, v) ? Entry::R : Entry::NR;
}

char entry_char(Entry e) { return e == Entry::Eq ? 'E' : (e == Entry::R ? 'R' : 'N'); }

std::string config_code(const Configuration& q) {
  std::string s;
  for (Entry e : q.upper_entries()) s.push_back(entry_char(e));
  return s;
}

template <class View>
std::string self_code(const View& m, int y) {
  const int ng = m.group().order();
  std::string s;
  for (int a = 0; a < ng; ++a)
    for (int b = a + 1; b < ng; ++b) s.push_back(entry_char(entry_of(m, m.act(a, y), m.act(b, y))));
  return s;
}

std::string slot_code(const Configuration& q, int slot) {
  const TermSet& ts = q.terms();
  const int ng = ts.group().order();
  std::string s;
  for (int a = 0; a < ng; ++a)
    for (int b = a + 1; b < ng; ++b) s.push_back(entry_char(q.at(ts.index(slot, a), ts.index(slot, b))));
  return s;
}

// Configuration of the given slot values, read off a structure.
template <class View>
Configuration read_configuration(const View& m, const TermSet& ts, const std::vector<int>& vals) {
  std::vector<int> value(static_cast<std::size_t>(ts.size()));
  for (int t = 0; t < ts.size(); ++t) value[static_cast<std::size_t>(t)] = m.act(ts.element(t), vals[static_cast<std::size_t>(ts.slot(t))]);
  Configuration q(ts);
  for (int a = 0; a < ts.size(); ++a)
    for (int b = 0; b < ts.size(); ++b)
      q.set_directed(a, b, entry_of(m, value[static_cast<std::size_t>(a)], value[static_cast<std::size_t>(b)]));
  return q;
}

using TypeIndex = std::unordered_map<std::string, std::vector<int>>;

// Looks for y-values realizing q over fixed x-values, slot by slot. A y-slot
// equal to an earlier term is determined; one adjacent to an earlier term is
// among that term's neighbours; otherwise it lies outside G.P u N(G.P), where
// only its self-type matters.
template <class View>
class WitnessFinder {
 public:
  WitnessFinder(const View& m, const TypeIndex& types, std::vector<unsigned>& stamp, unsigned& epoch)
      : m_(m), types_(types), stamp_(stamp), epoch_(epoch) {}

  std::optional<std::vector<int>> find(const Configuration& q, const std::vector<int>& xs) {
    q_ = &q;
    vals_ = xs;
    if (search(static_cast<int>(xs.size()))) return std::vector<int>(vals_.begin() + static_cast<long>(xs.size()), vals_.end());
    return std::nullopt;
  }

 private:
  bool matches(int slot, int y) const {
    const TermSet& ts = q_->terms();
    const int ng = ts.group().order();
    for (int h = 0; h < ng; ++h) {
      const int t = m_.act(h, y);
      for (int s = 0; s < slot; ++s)
        for (int g = 0; g < ng; ++g)
          if (entry_of(m_, t, m_.act(g, vals_[static_cast<std::size_t>(s)])) != q_->at(ts.index(slot, h), ts.index(s, g)))
            return false;
      for (int h2 = h + 1; h2 < ng; ++h2)
        if (entry_of(m_, t, m_.act(h2, y)) != q_->at(ts.index(slot, h), ts.index(slot, h2))) return false;
    }
    return true;
  }

  bool try_candidate(int slot, int y) {
    if (!matches(slot, y)) return false;
    vals_.push_back(y);
    if (search(slot + 1)) return true;
    vals_.pop_back();
    return false;
  }

  bool search(int slot) {
    const TermSet& ts = q_->terms();
    if (slot == ts.slots()) return true;
    const FiniteGroup& g = ts.group();
    const int ng = g.order();
    int adjacent_to = -1;
    for (int h = 0; h < ng; ++h)
      for (int s = 0; s < slot; ++s)
        for (int k = 0; k < ng; ++k) {
          const Entry e = q_->at(ts.index(slot, h), ts.index(s, k));
          if (e == Entry::NR) continue;
          const int target = m_.act(g.mul(g.inverse(h), k), vals_[static_cast<std::size_t>(s)]);
          if (e == Entry::Eq) return try_candidate(slot, target);
          if (adjacent_to < 0 || m_.neighbors(target).size() < m_.neighbors(adjacent_to).size()) adjacent_to = target;
        }
    if (adjacent_to >= 0) {
      const std::vector<int> cands = m_.neighbors(adjacent_to);
      for (int y : cands)
        if (try_candidate(slot, y)) return true;
      return false;
    }
    auto it = types_.find(slot_code(*q_, slot));
    if (it == types_.end()) return false;
    if (stamp_.size() < static_cast<std::size_t>(m_.size())) stamp_.resize(static_cast<std::size_t>(m_.size()), 0);
    const unsigned mark = ++epoch_;
    for (int s = 0; s < slot; ++s)
      for (int k = 0; k < ng; ++k) {
        const int u = m_.act(k, vals_[static_cast<std::size_t>(s)]);
        stamp_[static_cast<std::size_t>(u)] = mark;
        for (int w : m_.neighbors(u)) stamp_[static_cast<std::size_t>(w)] = mark;
      }
    for (int y : it->second) {
      if (stamp_[static_cast<std::size_t>(y)] == mark) continue;
      if (try_candidate(slot, y)) return true;
    }
    return false;
  }

  const View& m_;
  const TypeIndex& types_;
  std::vector<unsigned>& stamp_;
  unsigned& epoch_;
  const Configuration* q_ = nullptr;
  std::vector<int> vals_;
};

// Tuples over [0, pool) that are lexicographically least in their G-orbit.
template <class View>
std::vector<std::vector<int>> orbit_representatives(const View& m, int pool, int n) {
  std::vector<std::vector<int>> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  if (pool == 0) return out;
  std::vector<int> t(static_cast<std::size_t>(n), 0);
  while (true) {
    bool least = true;
    for (int g = 0; g < m.group().order() && least; ++g) {
      std::vector<int> img(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) img[i] = m.act(g, t[i]);
      if (img < t) least = false;
    }
    if (least) out.push_back(t);
    std::size_t i = t.size();
    while (i-- > 0) {
      if (++t[i] < pool) break;
      t[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

PartialConfig base_for(const Configuration& q0, int n_prime, bool allow_edges) {
  PartialConfig p(TermSet(q0.terms().group_ptr(), q0.terms().n(), n_prime));
  p.pin_z0(q0);
  if (!allow_edges)
    for (int a = 0; a < p.terms().size(); ++a)
      for (int b = 0; b < p.terms().size(); ++b)
        if (a != b) p.restrict(a, b, PartialConfig::kEq | PartialConfig::kNR);
  return p;
}

std::string fresh_label(std::unordered_set<std::string>& used, int index) {
  std::string l = "v" + std::to_string(index);
  while (used.count(l)) l += "'";
  used.insert(l);
  return l;
}

}  // namespace

SaturationState saturate_graph(const SaturationState& state, int rounds, const SaturateOptions& opts) {
  if (state.current.signature() != Signature::Graph)
    throw Error(Errc::UnsupportedSignature, "graph saturation needs the graph signature");
  if (rounds < 0 || opts.param_bound < 0 || opts.witness_bound < 0)
    throw Error(Errc::InvalidArgument, "rounds and bounds must be non-negative");
  SaturationState st = state;
  if (st.birth_round.size() != static_cast<std::size_t>(st.current.size()))
    throw Error(Errc::InvalidArgument, "birth rounds do not match the structure");
  GStructureBuilder b(st.current);
  const FiniteGroup& g = b.group();
  TypeIndex types;
  for (int y = 0; y < b.size(); ++y) types[self_code(b, y)].push_back(y);
  std::unordered_set<std::string> labels(st.current.labels().begin(), st.current.labels().end());
  std::vector<unsigned> stamp;
  unsigned epoch = 0;
  WitnessFinder<GStructureBuilder> finder(b, types, stamp, epoch);

  for (int step = 0; step < rounds && !st.truncated; ++step) {
    const int r = st.round + 1;
    const int pool = b.size();
    std::vector<std::pair<std::pair<int, int>, std::vector<int>>> reps;
    for (int n = 0; n <= opts.param_bound; ++n)
      for (auto& t : orbit_representatives(b, pool, n)) {
        int born = -1;
        for (int x : t) born = std::max(born, st.birth_round[static_cast<std::size_t>(x)]);
        reps.push_back({{born, n}, std::move(t)});
      }
    std::sort(reps.begin(), reps.end());
    for (const auto& rep : reps) {
      if (st.truncated) break;
      const std::vector<int>& xs = rep.second;
      const Configuration q0 = read_configuration(b, TermSet(st.current.group_ptr(), static_cast<int>(xs.size()), 0), xs);
      for (int np = 1; np <= opts.witness_bound && !st.truncated; ++np) {
        for_each_extension(base_for(q0, np, true), [&](const Configuration& q) {
          auto found = finder.find(q, xs);
          nlohmann::json line;
          if (opts.keep_log) {
            line["round"] = r;
            line["params"] = xs;
            line["config"] = config_code(q);
          }
          if (found) {
            if (opts.keep_log) {
              line["action"] = "satisfied";
              line["witness"] = *found;
              st.log.push_back(line.dump());
            }
            return true;
          }
          const ConsistencyReport rep_q = is_consistent(q);
          const GStructure& w = *rep_q.witness;
          const TermSet& ts = q.terms();
          // classes containing an x-term are already present in the structure
          std::vector<int> where(static_cast<std::size_t>(w.size()), -1);
          for (int t = 0; t < ts.z0_size(); ++t)
            where[static_cast<std::size_t>(rep_q.realization[static_cast<std::size_t>(t)])] =
                b.act(ts.element(t), xs[static_cast<std::size_t>(ts.slot(t))]);
          std::vector<int> fresh;
          for (int c = 0; c < w.size(); ++c)
            if (where[static_cast<std::size_t>(c)] < 0) fresh.push_back(c);
          if (static_cast<std::size_t>(b.size()) + fresh.size() > opts.size_cap) {
            st.truncated = true;
            if (opts.keep_log) {
              line["action"] = "truncated";
              st.log.push_back(line.dump());
            }
            return false;
          }
          std::vector<int> local(static_cast<std::size_t>(w.size()), -1);
          for (std::size_t i = 0; i < fresh.size(); ++i) local[static_cast<std::size_t>(fresh[i])] = static_cast<int>(i);
          std::vector<std::string> new_labels;
          for (std::size_t i = 0; i < fresh.size(); ++i)
            new_labels.push_back(fresh_label(labels, b.size() + static_cast<int>(i)));
          std::vector<std::vector<int>> perm(static_cast<std::size_t>(g.order()));
          for (int k = 0; k < g.order(); ++k)
            for (int c : fresh) perm[static_cast<std::size_t>(k)].push_back(local[static_cast<std::size_t>(w.act(k, c))]);
          const int base = b.add_orbit_block(new_labels, perm);
          for (int c : fresh) where[static_cast<std::size_t>(c)] = base + local[static_cast<std::size_t>(c)];
          for (int c : fresh)
            for (int d : w.neighbors(c)) b.add_edge(where[static_cast<std::size_t>(c)], where[static_cast<std::size_t>(d)]);
          for (std::size_t i = 0; i < fresh.size(); ++i) {
            const int y = base + static_cast<int>(i);
            st.birth_round.push_back(r);
            types[self_code(b, y)].push_back(y);
          }
          if (opts.keep_log) {
            std::vector<int> ys;
            for (int s = ts.n(); s < ts.slots(); ++s)
              ys.push_back(where[static_cast<std::size_t>(rep_q.realization[static_cast<std::size_t>(ts.index(s, g.identity()))])]);
            line["action"] = "extended";
            line["witness"] = ys;
            line["added"] = fresh.size();
            st.log.push_back(line.dump());
          }
          return true;
        });
      }
    }
    st.round = r;
  }
  st.current = b.build();
  return st;
}

GStructure coset_space(const GroupPtr& g, const Subgroup& h) {
  const auto blocks = cosets(*g, h);
  std::vector<int> owner(static_cast<std::size_t>(g->order()));
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (int x : blocks[i]) owner[static_cast<std::size_t>(x)] = static_cast<int>(i);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < blocks.size(); ++i) labels.push_back("c" + std::to_string(i));
  std::vector<std::vector<int>> action(static_cast<std::size_t>(g->order()));
  for (int k = 0; k < g->order(); ++k)
    for (const auto& blk : blocks) action[static_cast<std::size_t>(k)].push_back(owner[static_cast<std::size_t>(g->mul(k, blk.front()))]);
  return GStructure(Signature::Empty, g, std::move(labels), {}, std::move(action));
}

SaturationState saturate_empty(const SaturationState& state, int copies) {
  if (state.current.signature() != Signature::Empty)
    throw Error(Errc::UnsupportedSignature, "orbit-sum saturation needs the empty signature");
  if (copies < 0) throw Error(Errc::InvalidArgument, "copies must be non-negative");
  if (copies == 0) return state;
  SaturationState st = state;
  GStructureBuilder b(st.current);
  std::unordered_set<std::string> labels(st.current.labels().begin(), st.current.labels().end());
  const int r = st.round + 1;
  const GroupPtr& g = st.current.group_ptr();
  for (const auto& h : subgroups(*g)) {
    const GStructure cs = coset_space(g, h);
    for (int c = 0; c < copies; ++c) {
      std::vector<std::string> new_labels;
      for (int i = 0; i < cs.size(); ++i) new_labels.push_back(fresh_label(labels, b.size() + i));
      b.add_orbit_block(new_labels, cs.action());
      st.birth_round.insert(st.birth_round.end(), static_cast<std::size_t>(cs.size()), r);
      nlohmann::json line;
      line["round"] = r;
      line["subgroup"] = h.members;
      line["action"] = "extended";
      line["added"] = cs.size();
      st.log.push_back(line.dump());
    }
  }
  st.round = r;
  st.current = b.build();
  return st;
}

AmalgamResult free_amalgam(const GStructure& b, const GStructure& c, const std::vector<std::pair<int, int>>& common) {
  if (b.signature() != c.signature()) throw Error(Errc::SignatureMismatch, "signatures differ");
  if (b.signature() == Signature::Order) throw Error(Errc::UnsupportedSignature, "no free amalgam for orders");
  if (!(b.group() == c.group())) throw Error(Errc::InvalidArgument, "groups differ");
  std::unordered_map<int, int> c_to_b, b_to_c;
  for (auto [x, y] : common) {
    if (!b.contains(x) || !c.contains(y)) throw Error(Errc::UnknownElement, "common pair outside the universe");
    if (!c_to_b.emplace(y, x).second || !b_to_c.emplace(x, y).second)
      throw Error(Errc::InvalidArgument, "common part is not a bijection");
  }
  for (auto [x, y] : common) {
    for (int g = 0; g < b.group().order(); ++g) {
      auto it = b_to_c.find(b.act(g, x));
      if (it == b_to_c.end() || it->second != c.act(g, y))
        throw Error(Errc::ActionMismatchOnBase, "actions disagree on the common part");
    }
    for (auto [x2, y2] : common)
      if (b.related(x, x2) != c.related(y, y2))
        throw Error(Errc::InvalidArgument, "the common part is not a common substructure");
  }
  AmalgamResult res{GStructure::empty(b.signature(), b.group_ptr()), {}, {}};
  res.from_b.resize(static_cast<std::size_t>(b.size()));
  std::iota(res.from_b.begin(), res.from_b.end(), 0);
  std::vector<std::string> labels = b.labels();
  std::unordered_set<std::string> used(labels.begin(), labels.end());
  res.from_c.assign(static_cast<std::size_t>(c.size()), -1);
  int next = b.size();
  for (int y = 0; y < c.size(); ++y) {
    auto it = c_to_b.find(y);
    if (it != c_to_b.end()) {
      res.from_c[static_cast<std::size_t>(y)] = it->second;
      continue;
    }
    res.from_c[static_cast<std::size_t>(y)] = next++;
    std::string l = c.label(y);
    while (used.count(l)) l += "'";
    used.insert(l);
    labels.push_back(l);
  }
  auto pairs = b.relation_pairs();
  for (auto [u, v] : c.relation_pairs()) {
    const int fu = res.from_c[static_cast<std::size_t>(u)], fv = res.from_c[static_cast<std::size_t>(v)];
    if (fu >= b.size() || fv >= b.size()) pairs.emplace_back(fu, fv);
  }
  std::vector<std::vector<int>> action = b.action();
  for (int g = 0; g < b.group().order(); ++g) {
    auto& row = action[static_cast<std::size_t>(g)];
    row.resize(static_cast<std::size_t>(next));
    for (int y = 0; y < c.size(); ++y) {
      const int fy = res.from_c[static_cast<std::size_t>(y)];
      if (fy >= b.size()) row[static_cast<std::size_t>(fy)] = res.from_c[static_cast<std::size_t>(c.act(g, y))];
    }
  }
  res.structure = GStructure(b.signature(), b.group_ptr(), std::move(labels), std::move(pairs), std::move(action));
  return res;
}

std::vector<AxiomInstance> verify_extension_axioms(const GStructure& m, Theory theory, int param_bound,
                                                   int witness_bound, const VerifyOptions& opts) {
  if (m.signature() != theory_signature(theory))
    throw Error(Errc::SignatureMismatch, "structure signature does not match the theory");
  if (param_bound < 0 || witness_bound < 0) throw Error(Errc::InvalidArgument, "bounds must be non-negative");
  std::vector<int> pool;
  if (opts.param_pool) {
    pool = *opts.param_pool;
    for (int x : pool)
      if (!m.contains(x)) throw Error(Errc::UnknownElement, "parameter pool outside the universe");
  } else {
    pool.resize(static_cast<std::size_t>(m.size()));
    std::iota(pool.begin(), pool.end(), 0);
  }
  const bool edges = theory == Theory::Graph;
  const int ng = m.group().order();
  std::map<std::string, std::vector<int>> types;
  for (int y = 0; y < m.size(); ++y) types[self_code(m, y)].push_back(y);
  std::vector<AxiomInstance> failures;
  std::size_t work = 0;
  auto charge = [&](std::size_t k) {
    work += k;
    if (work > opts.instance_cap) throw Error(Errc::BudgetExceeded, "axiom verification exceeded its budget");
  };
  std::vector<char> local(static_cast<std::size_t>(m.size()), 0);
  for (int n = 0; n <= param_bound; ++n) {
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    if (n > 0 && pool.empty()) break;
    while (true) {
      std::vector<int> xs;
      for (int i : idx) xs.push_back(pool[static_cast<std::size_t>(i)]);
      const TermSet ts0(m.group_ptr(), n, 0);
      const Configuration q0 = read_configuration(m, ts0, xs);
      for (int np = 1; np <= witness_bound; ++np) {
        const TermSet ts(m.group_ptr(), n, np);
        std::unordered_set<std::string> realized;
        if (np == 1) {
          std::vector<int> near;
          for (int x : xs)
            for (int g = 0; g < ng; ++g) {
              const int u = m.act(g, x);
              near.push_back(u);
              for (int w : m.neighbors(u)) near.push_back(w);
            }
          near = make_set(std::move(near));
          for (int y : near) local[static_cast<std::size_t>(y)] = 1;
          for (int y : near) {
            charge(1);
            std::vector<int> vals = xs;
            vals.push_back(y);
            realized.insert(config_code(read_configuration(m, ts, vals)));
          }
          for (const auto& [code, members] : types) {
            for (int y : members) {
              charge(1);
              if (local[static_cast<std::size_t>(y)]) continue;
              std::vector<int> vals = xs;
              vals.push_back(y);
              realized.insert(config_code(read_configuration(m, ts, vals)));
              break;
            }
          }
          for (int y : near) local[static_cast<std::size_t>(y)] = 0;
        } else {
          std::vector<int> t(static_cast<std::size_t>(np), 0);
          if (m.size() > 0) {
            while (true) {
              charge(1);
              std::vector<int> vals = xs;
              vals.insert(vals.end(), t.begin(), t.end());
              realized.insert(config_code(read_configuration(m, ts, vals)));
              std::size_t i = t.size();
              while (i-- > 0) {
                if (++t[i] < m.size()) break;
                t[i] = 0;
              }
              if (i == static_cast<std::size_t>(-1)) break;
            }
          }
        }
        for_each_extension(base_for(q0, np, edges), [&](const Configuration& q) {
          charge(1);
          if (!realized.count(config_code(q))) failures.push_back(AxiomInstance{q, xs});
          return true;
        });
      }
      std::size_t i = idx.size();
      while (i-- > 0) {
        if (++idx[i] < static_cast<int>(pool.size())) break;
        idx[i] = 0;
      }
      if (i == static_cast<std::size_t>(-1)) break;
    }
  }
  return failures;
}

std::string describe_instance(const GStructure& m, const AxiomInstance& inst) {
  std::string s = "params [";
  for (std::size_t i = 0; i < inst.params.size(); ++i) s += (i ? ", " : "") + m.label(inst.params[i]);
  s += "] n'=" + std::to_string(inst.config.terms().n_prime()) + " config " + config_code(inst.config);
  return s;
}

OrbitClosureOracle::OrbitClosureOracle(Theory theory, const GStructure& m)
    : theory_(theory), gens_(greedy_generators(m.group())), perms_(m.action()) {}

ElementSet OrbitClosureOracle::dcl(const ElementSet& a) const {
  const std::size_t n = perms_.empty() ? 0 : perms_.front().size();
  std::vector<char> in(n, 0);
  std::vector<int> queue;
  for (int x : a) {
    if (x < 0 || static_cast<std::size_t>(x) >= n) throw Error(Errc::UnknownElement, "element outside the universe");
    if (!in[static_cast<std::size_t>(x)]) {
      in[static_cast<std::size_t>(x)] = 1;
      queue.push_back(x);
    }
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (int g : gens_) {
      const int y = perms_[static_cast<std::size_t>(g)][static_cast<std::size_t>(queue[qi])];
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = 1;
        queue.push_back(y);
      }
    }
  return make_set(std::move(queue));
}

}  // namespace gact
