#include "gact/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "gact/error.hpp"

namespace gact {

namespace {

using json = nlohmann::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::InvalidArgument, std::string("malformed JSON: ") + e.what());
  }
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("unexpected JSON shape: ") + e.what());
  }
}

json group_json(const FiniteGroup& g) {
  return json{{"order", g.order()}, {"names", g.names()}, {"table", g.table()}};
}

GroupPtr group_of(const json& j) {
  auto names = j.at("names").get<std::vector<std::string>>();
  if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(names.size()))
    throw Error(Errc::InvalidGroup, "order does not match the number of names");
  return make_group(std::move(names), j.at("table").get<std::vector<std::vector<int>>>());
}

json structure_json(const GStructure& m) {
  json j;
  j["signature"] = std::string(signature_name(m.signature()));
  j["group"] = group_json(m.group());
  j["universe"] = m.labels();
  json rel = json::object();
  if (m.signature() != Signature::Empty) {
    json pairs = json::array();
    for (auto [a, b] : m.relation_pairs())
      if (m.signature() == Signature::Order || a < b) pairs.push_back({a, b});
    rel["R"] = std::move(pairs);
  }
  j["relations"] = std::move(rel);
  json action = json::object();
  for (int g = 0; g < m.group().order(); ++g) action[m.group().name(g)] = m.perm(g);
  j["action"] = std::move(action);
  return j;
}

json entry_json(Entry e) { return std::string(entry_name(e)); }

Entry entry_of(const std::string& s) {
  if (s == "EQ") return Entry::Eq;
  if (s == "R") return Entry::R;
  if (s == "NR") return Entry::NR;
  throw Error(Errc::InvalidArgument, "unknown configuration entry '" + s + "'");
}

}  // namespace

std::string to_json(const FiniteGroup& g) { return dump(group_json(g)); }

GroupPtr group_from_json(std::string_view text) {
  json j = parse_json(text);
  return guarded([&] { return group_of(j); });
}

std::string to_json(const GStructure& m) { return dump(structure_json(m)); }

GStructure structure_from_json(std::string_view text) {
  json j = parse_json(text);
  return guarded([&] {
    Signature sig = parse_signature(j.at("signature").get<std::string>());
    GroupPtr g = group_of(j.at("group"));
    auto universe = j.at("universe").get<std::vector<std::string>>();
    std::vector<std::pair<int, int>> pairs;
    const json& rel = j.at("relations");
    for (auto it = rel.begin(); it != rel.end(); ++it) {
      if (it.key() != "R") throw Error(Errc::SignatureMismatch, "unknown relation symbol '" + it.key() + "'");
      if (sig == Signature::Empty && !it->empty())
        throw Error(Errc::SignatureMismatch, "the empty signature has no relation");
      for (const auto& p : *it) {
        if (!p.is_array() || p.size() != 2) throw Error(Errc::InvalidArgument, "relation entries are pairs");
        pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
      }
    }
    std::vector<std::vector<int>> action(static_cast<std::size_t>(g->order()));
    const json& act = j.at("action");
    if (act.size() != static_cast<std::size_t>(g->order()))
      throw Error(Errc::InvalidStructure, "action must list every group element");
    for (auto it = act.begin(); it != act.end(); ++it) {
      auto idx = g->find(it.key());
      if (!idx) throw Error(Errc::UnknownGroupElement, "unknown group element '" + it.key() + "'");
      action[static_cast<std::size_t>(*idx)] = it->get<std::vector<int>>();
    }
    return GStructure(sig, g, std::move(universe), std::move(pairs), std::move(action));
  });
}

std::string to_json(const Configuration& q) {
  const TermSet& ts = q.terms();
  json j;
  j["group"] = group_json(ts.group());
  j["n"] = ts.n();
  j["n_prime"] = ts.n_prime();
  json names = json::array();
  for (int t = 0; t < ts.size(); ++t) names.push_back(ts.name(t));
  j["terms"] = std::move(names);
  json entries = json::array();
  for (int a = 0; a < ts.size(); ++a)
    for (int b = 0; b < ts.size(); ++b) entries.push_back({a, b, entry_json(q.at(a, b))});
  j["entries"] = std::move(entries);
  return dump(j);
}

Configuration configuration_from_json(std::string_view text) {
  json j = parse_json(text);
  return guarded([&] {
    TermSet ts(group_of(j.at("group")), j.at("n").get<int>(), j.at("n_prime").get<int>());
    Configuration q(ts);
    const auto size = ts.size();
    std::vector<char> seen(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0);
    for (const auto& e : j.at("entries")) {
      if (!e.is_array() || e.size() != 3) throw Error(Errc::InvalidArgument, "entries are [term, term, entry] triples");
      int a = e[0].get<int>();
      int b = e[1].get<int>();
      if (a < 0 || b < 0 || a >= size || b >= size) throw Error(Errc::InvalidArgument, "term index out of range");
      q.set_directed(a, b, entry_of(e[2].get<std::string>()));
      seen[static_cast<std::size_t>(a) * static_cast<std::size_t>(size) + static_cast<std::size_t>(b)] = 1;
    }
    for (char s : seen)
      if (!s) throw Error(Errc::InvalidArgument, "configuration must list every ordered pair of terms");
    return q;
  });
}

std::string to_json(const AxiomReport& r) {
  json j;
  j["theory"] = std::string(theory_name(r.theory));
  j["group"] = r.group;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  json axioms = json::array();
  for (const auto& a : r.axioms)
    axioms.push_back({{"name", a.name}, {"trials", a.trials}, {"failures", a.failures}, {"examples", a.examples}});
  j["axioms"] = std::move(axioms);
  j["axiom_failures"] = r.axiom_failures();
  return dump(j);
}

std::string to_json(const GaloisReport& r) {
  json j;
  j["intermediates"] = r.intermediates;
  j["subgroups"] = r.subgroups;
  j["aut_order"] = r.aut_order;
  j["alpha_law"] = r.alpha_law;
  j["beta_law"] = r.beta_law;
  j["full_correspondence"] = r.full_correspondence;
  j["law_failures"] = r.law_failures;
  j["correspondence_failures"] = r.correspondence_failures;
  return dump(j);
}

GroupPtr load_group(std::string_view name_or_path) {
  std::string s(name_or_path);
  if (std::filesystem::exists(s)) return group_from_json(read_text_file(s));
  return named_group(s);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write '" + path + "'");
  out << text;
}

}  // namespace gact
