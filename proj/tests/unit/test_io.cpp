#include <gtest/gtest.h>

#include <filesystem>

#include "json.hpp"

#include "gact/io.hpp"
#include "expect_error.hpp"
#include "generators.hpp"

using namespace gact;
using gact::gen::code_of;

TEST(Io, GroupRoundTrip) {
  for (const auto& [name, g] : group_corpus(16)) {
    const std::string text = to_json(*g);
    auto back = group_from_json(text);
    EXPECT_EQ(*back, *g) << name;
    EXPECT_EQ(to_json(*back), text);
  }
}

TEST(Io, StructureRoundTripIsByteStable) {
  for (const char* gname : {"z1", "z2", "z3", "z2xz2", "s3"}) {
    auto g = named_group(gname);
    for (int t = 0; t < 40; ++t) {
      Rng rng(child_seed(113, static_cast<std::uint64_t>(t)));
      GStructure m = random_g_structure(t % 2 ? Theory::Graph : Theory::Empty, g, rng);
      const std::string text = to_json(m);
      GStructure back = structure_from_json(text);
      EXPECT_EQ(back, m);
      EXPECT_EQ(to_json(back), text);
    }
  }
  auto chain = GStructure::with_trivial_action(Signature::Order, named_group("z2"), {"a", "b", "c"},
                                               {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_EQ(structure_from_json(to_json(chain)), chain);
}

TEST(Io, StructureShape) {
  auto z2 = named_group("z2");
  GStructure edge(Signature::Graph, z2, {"v0", "v1"}, {{0, 1}}, {{0, 1}, {1, 0}});
  auto j = nlohmann::json::parse(to_json(edge));
  EXPECT_EQ(j["signature"], "graph");
  EXPECT_EQ(j["relations"]["R"], nlohmann::json::parse("[[0, 1]]"));
  EXPECT_EQ(j["action"]["s"], nlohmann::json::parse("[1, 0]"));
  EXPECT_EQ(j["universe"], nlohmann::json::parse(R"(["v0", "v1"])"));
}

TEST(Io, StructureReaderRejectsBadInput) {
  EXPECT_EQ(code_of([] { structure_from_json("{"); }), Errc::InvalidArgument);
  EXPECT_EQ(code_of([] { structure_from_json("{}"); }), Errc::InvalidArgument);
  auto z2 = named_group("z2");
  GStructure pair(Signature::Empty, z2, {"a", "b"}, {}, {{0, 1}, {1, 0}});
  auto j = nlohmann::json::parse(to_json(pair));
  j["action"]["s"] = {0, 0};
  EXPECT_EQ(code_of([&] { structure_from_json(j.dump()); }), Errc::InvalidStructure);
  j = nlohmann::json::parse(to_json(pair));
  j["action"]["q"] = j["action"]["s"];
  j["action"].erase("s");
  EXPECT_EQ(code_of([&] { structure_from_json(j.dump()); }), Errc::UnknownGroupElement);
}

TEST(Io, ConfigurationRoundTrip) {
  TermSet ts(named_group("z3"), 1, 1);
  for (const auto& q : enumerate_extensions(std::vector<Literal>{}, ts)) {
    const std::string text = to_json(q);
    EXPECT_EQ(configuration_from_json(text), q);
    EXPECT_EQ(to_json(configuration_from_json(text)), text);
  }
  auto j = nlohmann::json::parse(to_json(Configuration(ts)));
  j["entries"].erase(j["entries"].size() - 1);
  EXPECT_EQ(code_of([&] { configuration_from_json(j.dump()); }), Errc::InvalidArgument);
}

TEST(Io, ReportsAreStable) {
  auto rep = check_axioms(Theory::Graph, named_group("z2"), 5, 1);
  auto j = nlohmann::json::parse(to_json(rep));
  EXPECT_EQ(j["axioms"].size(), 7u);
  EXPECT_EQ(j["trials"], 5);
  GaloisReport g;
  EXPECT_EQ(to_json(g), to_json(g));
  EXPECT_TRUE(nlohmann::json::parse(to_json(g))["full_correspondence"].get<bool>());
}

TEST(Io, LoadGroupFromNameOrFile) {
  EXPECT_EQ(load_group("s3")->order(), 6);
  const auto path = std::filesystem::temp_directory_path() / "gact_io_group.json";
  write_text_file(path.string(), to_json(*named_group("q8")));
  EXPECT_EQ(*load_group(path.string()), *named_group("q8"));
  std::filesystem::remove(path);
  EXPECT_EQ(code_of([] { read_text_file("/nonexistent/gact/file"); }), Errc::InvalidArgument);
}
