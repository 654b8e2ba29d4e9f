#include <random>

#include "gtest/gtest.h"
#include "sqc/pipeline.hpp"
#include "sqc/registry.hpp"
#include "test_util.hpp"

using namespace sqc;

namespace {

DesignDocument with_topology(int m, int n) {
  DesignDocument d;
  d.name = "t";
  d.topology = generate_grid(m, n);
  return d;
}

const DesignDocument& full_8x8() {
  static const DesignDocument d = [] {
    PipelineConfig cfg;
    cfg.rows = cfg.cols = 8;
    return run_pipeline(cfg).doc;
  }();
  return d;
}

RequestKey grid_key() { return make_key(RequestCategory::DesignEntity, "topology.generate-grid", {"rows", "cols"}); }

}  // namespace

TEST(Extract, Examples) {
  const DesignDocument d = with_topology(2, 3);
  const ParameterBundle b = extract(d, "topology");
  ASSERT_TRUE(b.topology);
  EXPECT_EQ(*b.topology, *d.topology);
  EXPECT_FALSE(b.circuit || b.layout || b.process_rules);
  EXPECT_EQ(code_of([&] { extract(d, "layout"); }), ErrorCode::MissingSubEntity);
  EXPECT_EQ(code_of([&] { extract(d, "circuit"); }), ErrorCode::MissingSubEntity);
  EXPECT_EQ(code_of([&] { extract(d, "geometry"); }), ErrorCode::UnknownSelector);
}

TEST(Extract, PureAndDeep) {
  const DesignDocument& d = full_8x8();
  const DesignDocument before = d;
  ParameterBundle a = extract(d, "all");
  const ParameterBundle b = extract(d, "all");
  EXPECT_EQ(a, b);
  EXPECT_EQ(d, before);
  a.layout->components.clear();  // snapshot, not a view
  EXPECT_EQ(d, before);
}

TEST(Inject, AllRoundTrip) {
  const DesignDocument& d = full_8x8();
  const DesignDocument back = inject(d, extract(d, "all"));
  ASSERT_EQ(back.provenance.size(), d.provenance.size() + 1);
  DesignDocument trimmed = back;
  trimmed.provenance.pop_back();
  EXPECT_EQ(trimmed, d);
}

TEST(Inject, EmptyBundleOnlyLogs) {
  const DesignDocument d = with_topology(2, 2);
  const DesignDocument out = inject(d, ParameterBundle{}, "noop");
  ASSERT_EQ(out.provenance.size(), 1u);
  EXPECT_EQ(out.provenance[0].operation, "noop");
  EXPECT_EQ(out.provenance[0].timestamp, kEpochTimestamp);
  EXPECT_EQ(out.provenance[0].digest.size(), 16u);
  DesignDocument trimmed = out;
  trimmed.provenance.clear();
  EXPECT_EQ(trimmed, d);
}

TEST(Inject, ModifyOneCoordinateOnlyTopologyDiffers) {
  const DesignDocument& d = full_8x8();
  ParameterBundle b = extract(d, "topology");
  b.topology->qubits.begin()->second.col += 100;
  const DesignDocument out = inject(d, b, "move");
  EXPECT_NE(out.topology, d.topology);
  EXPECT_EQ(out.circuit, d.circuit);
  EXPECT_EQ(out.layout, d.layout);
  EXPECT_EQ(out.process_rules, d.process_rules);
  EXPECT_EQ(out.name, d.name);
  EXPECT_TRUE(std::equal(d.provenance.begin(), d.provenance.end(), out.provenance.begin()));
}

TEST(Inject, CrossEntityViolationLeavesDocument) {
  const DesignDocument& d = full_8x8();
  const DesignDocument before = d;
  ParameterBundle b = extract(d, "topology");
  ASSERT_TRUE(b.topology->qubits.count("Q5"));
  b.topology->qubits.erase("Q5");
  EXPECT_EQ(code_of([&] { inject(d, b); }), ErrorCode::CrossEntityViolation);
  EXPECT_EQ(d, before);

  // A circuit naming an unknown qubit.
  DesignDocument small = with_topology(1, 2);
  ParameterBundle c;
  c.circuit = EquivalentCircuit{};
  c.circuit->qubits["Q9"] = {};
  EXPECT_EQ(code_of([&] { inject(small, c); }), ErrorCode::CrossEntityViolation);

  ParameterBundle v;
  v.version = "sqd-0";
  EXPECT_EQ(code_of([&] { inject(small, v); }), ErrorCode::VersionMismatch);
  EXPECT_TRUE(small.provenance.empty());
}

TEST(Inject, ProvenanceAppendOnly) {
  DesignDocument d = with_topology(2, 2);
  std::vector<ProvenanceRecord> log;
  for (int i = 0; i < 5; ++i) {
    d = inject(d, extract(d, "topology"), "op" + std::to_string(i), std::to_string(i));
    ASSERT_EQ(d.provenance.size(), log.size() + 1);
    ASSERT_TRUE(std::equal(log.begin(), log.end(), d.provenance.begin()));
    log = d.provenance;
  }
  // Digest depends on arguments and content, and is stable.
  EXPECT_NE(log[0].digest, log[1].digest);
  EXPECT_EQ(inject(with_topology(2, 2), extract(d, "topology"), "x", "0").provenance[0].digest, log[0].digest);
}

TEST(Digest, Fnv1a64Vectors) {
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ull);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cull);
  EXPECT_EQ(fnv1a64("foobar"), 0x85944171f73967e8ull);
  EXPECT_EQ(hex64(0xaf63dc4c8601ec8cull), "af63dc4c8601ec8c");
  EXPECT_EQ(hex64(1), "0000000000000001");
}

TEST(SaveLoad, EmptyDocument) {
  const DesignDocument d;
  EXPECT_EQ(load(save(d)), d);
  EXPECT_EQ(save(load(save(d))), save(d));
}

TEST(SaveLoad, FullPipelineDocument) {
  DesignDocument d = full_8x8();
  d.layout_ref = "chip.gds";
  const std::string text = save(d);
  const DesignDocument back = load(text);
  EXPECT_EQ(back, d);
  EXPECT_EQ(save(back), text);
  // Canonical sections.
  for (const char* key : {"\"meta\"", "\"topology\"", "\"circuit\"", "\"layout\"", "\"layout_ref\"",
                          "\"process_rules\"", "\"provenance\"", "\"sqd-1\""})
    EXPECT_NE(text.find(key), std::string::npos) << key;
}

TEST(SaveLoad, ProcessOnlyAndMidwayDocuments) {
  DesignDocument d = with_topology(3, 2);
  d.process_rules = builtin_process("fine-4um");
  d = inject(d, ParameterBundle{}, "noop", "a=1");
  EXPECT_EQ(load(save(d)), d);
}

TEST(SaveLoad, TruncatedAndBadInput) {
  const std::string text = save(full_8x8());
  for (std::size_t cut : {std::size_t{0}, std::size_t{1}, text.size() / 3, text.size() / 2, text.size() - 2}) {
    try {
      load(text.substr(0, cut));
      ADD_FAILURE() << "loaded truncated text at " << cut;
    } catch (const ParseFailure& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError);
      if (cut > 0) EXPECT_LE(e.offset(), cut) << cut;
    }
  }
  // Well-formed JSON, wrong field type: reported by field path.
  try {
    load(R"({"meta":{"name":"x","version":"sqd-1"},"topology":{"qubits":7}})");
    ADD_FAILURE() << "accepted bad topology";
  } catch (const ParseFailure& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_EQ(e.field_path().rfind("/topology", 0), 0u) << e.field_path();
  }
  EXPECT_EQ(code_of([] { load(R"({"meta":{"name":"x","version":"sqd-9"}})"); }), ErrorCode::VersionMismatch);
  EXPECT_EQ(code_of([] { load(R"({"meta":{"name":"x"}})"); }), ErrorCode::ParseError);
}

TEST(SaveLoad, FileRoundTrip) {
  const auto path = ::testing::TempDir() + "doc_roundtrip.sqd";
  const DesignDocument d = with_topology(2, 2);
  save_file(path, d);
  EXPECT_EQ(load_file(path), d);
  EXPECT_EQ(code_of([] { load_file("/nonexistent/dir/x.sqd"); }), ErrorCode::IoError);
}

TEST(Registry, KeysAreCanonical) {
  const RequestKey a = make_key(RequestCategory::Function, "op", {"b", "a", "b"});
  EXPECT_EQ(a.parameter_signature, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(a, make_key(RequestCategory::Function, "op", {"a", "b"}));
  EXPECT_NE(a, make_key(RequestCategory::Library, "op", {"a", "b"}));
  Registry r;
  r.add(a, "", [](const ParameterBundle& b, const RequestArgs&) { return b; });
  EXPECT_EQ(code_of([&] { r.add(make_key(RequestCategory::Function, "op", {"a", "b"}), "", nullptr); }),
            ErrorCode::DuplicateRegistration);
  r.add(make_key(RequestCategory::Function, "op", {"a"}), "", [](const ParameterBundle& b, const RequestArgs&) { return b; });
  EXPECT_EQ(r.size(), 2u);
  EXPECT_NE(r.find(a), nullptr);
  EXPECT_NE(r.find(a)->number, r.find(make_key(RequestCategory::Function, "op", {"a"}))->number);
}

// Every key in the default table resolves to its own entry.
TEST(Registry, DefaultTableInjective) {
  const Registry& r = default_registry();
  const auto keys = r.keys();
  EXPECT_EQ(keys.size(), r.size());
  std::set<const HandlerEntry*> seen;
  for (const auto& k : keys) {
    const HandlerEntry* h = r.find(k);
    ASSERT_NE(h, nullptr) << k.str();
    EXPECT_TRUE(seen.insert(h).second);
  }
}

TEST(Dispatch, GenerateGridMatchesDirectCall) {
  const DesignDocument empty;
  const DesignDocument out = dispatch(default_registry(), grid_key(), empty, {{"rows", "2"}, {"cols", "2"}});
  ASSERT_TRUE(out.topology);
  EXPECT_EQ(out.topology->qubits.size(), 4u);
  EXPECT_EQ(*out.topology, generate_grid(2, 2));
  ASSERT_EQ(out.provenance.size(), 1u);
  EXPECT_EQ(out.provenance[0].operation, "topology.generate-grid");
}

TEST(Dispatch, Errors) {
  const DesignDocument d = with_topology(2, 2);
  EXPECT_EQ(code_of([&] { dispatch(default_registry(), make_key(RequestCategory::Function, "nope", {}), d, {}); }),
            ErrorCode::UnregisteredRequest);
  // Same operation, different signature is a different request.
  EXPECT_EQ(code_of([&] {
              dispatch(default_registry(), make_key(RequestCategory::DesignEntity, "topology.generate-grid", {"rows"}), d,
                       {{"rows", "2"}});
            }),
            ErrorCode::UnregisteredRequest);
  EXPECT_EQ(code_of([&] { dispatch(default_registry(), grid_key(), d, {{"rows", "2"}}); }), ErrorCode::InvalidArguments);
  // Handler errors propagate and the input is untouched.
  const DesignDocument before = d;
  EXPECT_EQ(code_of([&] { dispatch(default_registry(), grid_key(), d, {{"rows", "0"}, {"cols", "2"}}); }),
            ErrorCode::InvalidDimension);
  EXPECT_EQ(code_of([&] {
              dispatch(default_registry(), make_key(RequestCategory::Library, "process.lookup", {"name"}), d,
                       {{"name", "nope"}});
            }),
            ErrorCode::UnknownProcess);
  EXPECT_EQ(code_of([&] {
              dispatch(default_registry(), make_key(RequestCategory::Function, "layout.place", {"pitch"}), DesignDocument{},
                       {{"pitch", "1000"}});
            }),
            ErrorCode::MissingSubEntity);
  EXPECT_EQ(d, before);
}

TEST(Dispatch, ChainAndDeterminism) {
  auto run = [] {
    const Registry& r = default_registry();
    DesignDocument d = dispatch(r, grid_key(), DesignDocument{}, {{"rows", "3"}, {"cols", "3"}});
    d = dispatch(r, make_key(RequestCategory::Function, "circuit.inverse-solve", {"e_c", "frequencies", "g"}), d,
                 {{"e_c", "2.98e8"}, {"frequencies", "4.17e9,4.5e9"}, {"g", "1e7"}});
    d = dispatch(r, make_key(RequestCategory::Function, "layout.place", {"pitch"}), d, {{"pitch", "1000"}});
    d = dispatch(r, make_key(RequestCategory::Function, "process.apply", {"process"}), d, {{"process", "generic-10um"}});
    return d;
  };
  const DesignDocument a = run(), b = run();
  EXPECT_EQ(a, b);
  EXPECT_EQ(save(a), save(b));
  ASSERT_TRUE(a.circuit && a.layout && a.process_rules);
  EXPECT_EQ(a.circuit->qubits.size(), 9u);
  EXPECT_EQ(a.provenance.size(), 4u);
  EXPECT_EQ(load(save(a)), a);
}
