#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli/commands.hpp"
#include "cli/instance.hpp"
#include "tdvr/errors.hpp"
#include "tdvr/random.hpp"
#include "tdvr/text.hpp"

using namespace tdvr;
using namespace tdvr::cli;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = TDVR_FIXTURE_DIR;

int run_binary(const std::string& args) {
  const std::string cmd = std::string(TDVR_GB_BINARY) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string parse_message(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Instance, ParsesHeaderAndGenerators) {
  const Instance i = parse_instance("ring p=2 a=2 flavor=pi\nvars x\nrank 1\norder deglex pot\ngens: x + pi\n");
  EXPECT_EQ(i.module->ring(), RingSpec(2, 2, Flavor::EquiChar));
  EXPECT_EQ(i.module->var_names(), std::vector<std::string>{"x"});
  ASSERT_EQ(i.generators.size(), 1u);
  EXPECT_EQ(to_string(i.generators[0]), "x + pi");
  EXPECT_EQ(i.module->order().describe(), "deglex pot 1");
}

TEST(Instance, CommentsBlankLinesAndDefaults) {
  const Instance i = parse_instance(
      "# header\n\nring p=3 a=2 flavor=p   # Z/9\nvars x y\ngens:\n  x^2 - y  # first\n\n3*x*y\n");
  EXPECT_EQ(i.module->rank(), 1u);
  EXPECT_EQ(i.module->order().describe(), "degrevlex pot 1");
  EXPECT_EQ(i.generators.size(), 2u);
}

TEST(Instance, Diagnostics) {
  EXPECT_NE(parse_message("ring p=2 a=2 flavor=p\nvars x\ngens: x + pi\n").find("uniformizer literal mismatch"),
            std::string::npos);
  EXPECT_NE(parse_message("ring p=2 a=2 flavor=p\nvars x\nrank 2\ngens: x*e1 + x\n").find("component"),
            std::string::npos);
  EXPECT_NE(parse_message("ring p=2 a=2 flavor=p\nvars x\ngens:\n").find("no generators"), std::string::npos);
  EXPECT_NE(parse_message("ring p=2 a=2 flavor=p\nvars x\ngens: 4*x\n").find("zero generator"), std::string::npos);
  EXPECT_NE(parse_message("ring p=2 a=2 flavor=p\nvars x x\ngens: x\n").find("duplicate variable"), std::string::npos);
  EXPECT_NE(parse_message("ring p=2 a=2 flavor=q\nvars x\ngens: x\n").find("flavor"), std::string::npos);
  EXPECT_NE(parse_message("vars x\ngens: x\n").find("missing 'ring'"), std::string::npos);
  EXPECT_NE(parse_message("ring p=2 a=2 flavor=p\nvars x\norder bogus\ngens: x\n").find("line 3"), std::string::npos);
  EXPECT_NE(parse_message("ring p=2 a=2 flavor=p\nvars x\ngens:\nx\nx + y\n").find("line 5"), std::string::npos);
}

TEST(Instance, FormatRoundTripAndFingerprint) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 100; ++k) {
    const auto r = random_instance(random_shape(rng), rng);
    const Instance inst{r.module, r.generators};
    const std::string text = format_instance(inst);
    const Instance back = parse_instance(text);
    EXPECT_EQ(format_instance(back), text);
    EXPECT_EQ(fingerprint(back), fingerprint(inst));
  }
  const Instance a = parse_instance("ring p=2 a=2 flavor=pi\nvars x\ngens: x + pi\n");
  const Instance b = parse_instance("# same module\nring  p=2 a=2 flavor=pi\nvars x\ngens:\npi + x\n");
  const Instance c = parse_instance("ring p=2 a=2 flavor=pi\nvars x\ngens: x\n");
  EXPECT_EQ(fingerprint(a), fingerprint(b));
  EXPECT_NE(fingerprint(a), fingerprint(c));
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(Commands, FixtureExamples) {
  const Instance xpi = load_instance(kFixtures / "x_plus_pi.inst");
  Outcome o = run_command(xpi, {.command = "flat"});
  EXPECT_EQ(o.exit_code, kOk);
  EXPECT_EQ(o.report["result"]["flatness"]["verdict"], "flat");
  EXPECT_EQ(o.report["result"]["flatness"]["rank"]["count"], 1);

  const Instance two = load_instance(kFixtures / "two_x_plus_two.inst");
  o = run_command(two, {.command = "flat"});
  EXPECT_EQ(o.report["result"]["flatness"]["verdict"], "not flat");
  EXPECT_FALSE(o.report["result"]["flatness"]["witness"].is_null());

  o = run_command(xpi, {.command = "nf", .element = "x"});
  EXPECT_EQ(o.report["result"]["normal_form"]["text"], "pi");
}

TEST(Commands, ExitCodes) {
  const Instance pix = load_instance(kFixtures / "pi_x.inst");
  EXPECT_EQ(run_command(pix, {.command = "rank"}).exit_code, kPrecondition);
  EXPECT_EQ(run_command(pix, {.command = "member", .element = "x + q"}).exit_code, kParse);
  EXPECT_EQ(run_command(pix, {.command = "member"}).exit_code, kParse);
  EXPECT_EQ(run_command(pix, {.command = "gb", .order = "lex pot 1 2"}).exit_code, kParse);
  const Instance inh = load_instance(kFixtures / "x_plus_two.inst");
  EXPECT_EQ(run_command(inh, {.command = "oracle"}).exit_code, kPrecondition);
  const Instance big = parse_instance("ring p=2 a=2 flavor=pi\nvars x y\ngens:\nx^2 + y\nx*y + pi\ny^2 + x\n");
  const Outcome b = run_command(big, {.command = "gb", .pair_budget = 1});
  EXPECT_EQ(b.exit_code, kPrecondition);
  EXPECT_EQ(b.report["error"]["kind"], "pair_budget");
}

TEST(Commands, RankOnNonFlatCarriesLabeledOracleData) {
  const Instance pix = load_instance(kFixtures / "pi_x.inst");
  const Outcome o = run_command(pix, {.command = "rank"});
  ASSERT_TRUE(o.report["result"].contains("oracle_invariants"));
  EXPECT_TRUE(o.report["result"]["oracle_invariants"].contains("note"));
}

TEST(Commands, ReportRoundTrips) {
  for (const auto& entry : fs::directory_iterator(kFixtures)) {
    if (entry.path().extension() != ".inst") continue;
    const Instance inst = load_instance(entry.path());
    for (const char* cmd : {"gb", "minimal-gb", "flat", "rank", "gr", "oracle"}) {
      const Outcome o = run_command(inst, {.command = cmd, .trace = true, .dump_slices = true});
      const std::string text = render(o.report);
      EXPECT_EQ(render(nlohmann::json::parse(text)), text) << entry.path() << " " << cmd;
    }
  }
}

TEST(Commands, OrderOverride) {
  const Instance f5 = load_instance(kFixtures / "f5_curve.inst");
  const Outcome o = run_command(f5, {.command = "gb", .order = "lex pot"});
  EXPECT_EQ(o.exit_code, kOk);
  EXPECT_EQ(o.report["config"]["order"], "lex pot 1");
}

TEST(Commands, FlatAndOracleAgree) {
  std::vector<Instance> cases;
  for (const auto& entry : fs::directory_iterator(kFixtures))
    if (entry.path().extension() == ".inst") cases.push_back(load_instance(entry.path()));
  std::mt19937_64 rng(606);
  for (int k = 0; k < 60; ++k) {
    auto shape = random_shape(rng);
    shape.x_homogeneous = true;
    const auto r = random_instance(shape, rng);
    cases.push_back({r.module, r.generators});
  }
  int compared = 0;
  for (const auto& inst : cases) {
    const Outcome oracle = run_command(inst, {.command = "oracle"});
    if (oracle.exit_code == kPrecondition) continue;  // not x-homogeneous
    ASSERT_EQ(oracle.exit_code, kOk) << oracle.human;
    const Outcome flat = run_command(inst, {.command = "flat"});
    ASSERT_EQ(flat.exit_code, kOk) << flat.human;
    EXPECT_EQ(flat.report["result"]["flatness"]["flat"], oracle.report["result"]["oracle"]["flat"])
        << format_instance(inst);
    ++compared;
  }
  EXPECT_GE(compared, 60);
}

TEST(Binary, ExitCodesOnMalformedFixtures) {
  for (const auto& entry : fs::directory_iterator(kFixtures / "malformed"))
    EXPECT_EQ(run_binary("gb " + entry.path().string()), 2) << entry.path();
  EXPECT_EQ(run_binary("gb " + (kFixtures / "does_not_exist.inst").string()), 2);
  EXPECT_EQ(run_binary("frobnicate " + (kFixtures / "pi_x.inst").string()), 2);
  EXPECT_EQ(run_binary("rank " + (kFixtures / "pi_x.inst").string()), 3);
  EXPECT_EQ(run_binary("flat " + (kFixtures / "pi_x.inst").string()), 0);
  EXPECT_EQ(run_binary("member " + (kFixtures / "pi_x.inst").string() + " 'x*y'"), 2);
  EXPECT_EQ(run_binary("gb " + (kFixtures / "f5_curve.inst").string() + " --pair-budget 0"), 2);
}

TEST(Binary, WritesReportFile) {
  const fs::path out = fs::temp_directory_path() / "tdvr_cli_report_test.json";
  fs::remove(out);
  ASSERT_EQ(run_binary("member " + (kFixtures / "x_plus_pi.inst").string() + " 'x^2' --trace --out " + out.string()), 0);
  const auto report = nlohmann::json::parse(read_file(out));
  EXPECT_EQ(report["result"]["member"], true);
  EXPECT_EQ(report["command"], "member");
  fs::remove(out);
}
