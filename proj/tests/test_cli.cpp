#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>
#include <nlohmann/json.hpp>
#include <sombor/report.hpp>

#ifndef SOMBOR_CLI_PATH
#error "SOMBOR_CLI_PATH must point at the command-line binary"
#endif

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

/// Run the binary with a shell argument string; capture stdout. stderr is
/// discarded unless merge_stderr is set.
CliResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(SOMBOR_CLI_PATH) + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof(buffer), pipe)) > 0)
    result.output.append(buffer, got);
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::filesystem::path temp_file(const std::string& stem, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() /
                    (stem + "." + std::to_string(::getpid()) + ".txt");
  std::ofstream out(path, std::ios::binary);
  out << contents;
  out.close();
  return path;
}

int count_lines(const std::string& text) {
  int lines = 0;
  for (char c : text)
    if (c == '\n') ++lines;
  return lines;
}

}  // namespace

TEST_CASE("cli help and usage errors", "[cli]") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("compute --help").exit_code == 0);
  CHECK(run_cli("").exit_code == 2);                 // a subcommand is required
  CHECK(run_cli("--bogus").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("compute --format yaml").exit_code == 2);
}

TEST_CASE("cli compute emits the pinned csv table", "[cli]") {
  const CliResult r = run_cli("compute --family cycle --params 5 --alphas 1,2");
  CHECK(r.exit_code == 0);
  REQUIRE(!r.output.empty());
  CHECK(r.output.rfind("graph_index,graph6,n,m,index,param,value\n", 0) == 0);
  CHECK(r.output.find("0,Dhc,5,5,M1,,20\n") != std::string::npos);
  CHECK(r.output.find("0,Dhc,5,5,SO,,14.1421356237\n") != std::string::npos);
  CHECK(r.output.find("0,Dhc,5,5,SO_alpha,2,40\n") != std::string::npos);
  // Header + M1,M2 + M1P x2 + F,R + R_alpha x2 + chi + chi_alpha x2 + SO + SO_alpha x2.
  CHECK(count_lines(r.output) == 15);
}

TEST_CASE("cli compute reads graph6 and edge-list files", "[cli]") {
  const auto g6 = temp_file("cli_g6", ">>graph6<<A_\nBw\n\nD?{\n");
  const CliResult from_g6 =
      run_cli("compute --input " + g6.string() + " --alphas 1");
  CHECK(from_g6.exit_code == 0);
  CHECK(from_g6.output.find("0,A_,2,1,") != std::string::npos);
  CHECK(from_g6.output.find("1,Bw,3,3,") != std::string::npos);
  CHECK(from_g6.output.find("2,D?{,5,4,") != std::string::npos);

  // The header may also sit alone on the first line.
  const auto bare = temp_file("cli_bare", ">>graph6<<\nDhc\n");
  const CliResult from_bare =
      run_cli("compute --input " + bare.string() + " --alphas 1");
  CHECK(from_bare.exit_code == 0);
  CHECK(from_bare.output.find("0,Dhc,5,5,") != std::string::npos);

  const auto edges = temp_file("cli_edges", "# path on three vertices\n3 2\n0 1\n1 2\n");
  const CliResult from_edges =
      run_cli("compute --input " + edges.string() + " --alphas 1");
  CHECK(from_edges.exit_code == 0);
  CHECK(from_edges.output.find("0,Bg,3,2,M1,,6\n") != std::string::npos);

  std::filesystem::remove(g6);
  std::filesystem::remove(bare);
  std::filesystem::remove(edges);
}

TEST_CASE("cli compute rejects bad input with exit 2 and a located message", "[cli]") {
  CHECK(run_cli("compute").exit_code == 2);
  CHECK(run_cli("compute --input /nonexistent/x.g6").exit_code == 2);
  CHECK(run_cli("compute --family heap --params 3").exit_code == 2);
  CHECK(run_cli("compute --family cycle --params 2").exit_code == 2);

  const auto bad = temp_file("cli_bad", "2 1\n0 0\n");
  const CliResult r = run_cli("compute --input " + bad.string(), /*merge_stderr=*/true);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find(":2:") != std::string::npos);  // the offending line
  std::filesystem::remove(bad);

  const auto badg6 = temp_file("cli_badg6", "A_\nA`\n");
  const CliResult g6err = run_cli("compute --input " + badg6.string(), true);
  CHECK(g6err.exit_code == 2);
  CHECK(g6err.output.find(":2:") != std::string::npos);
  std::filesystem::remove(badg6);
}

TEST_CASE("cli compute json parses and carries the same values", "[cli]") {
  const CliResult r =
      run_cli("compute --family star --params 3 --alphas 3 --format json");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  REQUIRE(doc.contains("rows"));
  bool saw_so_alpha = false;
  for (const auto& row : doc["rows"]) {
    if (row["index"] == "SO_alpha") {
      saw_so_alpha = true;
      CHECK(row["param"].get<double>() == 3.0);
      CHECK(row["value"].get<double>() == 94.8683298051);
      CHECK(row["graph6"] == "Cs");
    }
  }
  CHECK(saw_so_alpha);
}

TEST_CASE("cli enumerate emits deterministic graph6 corpora", "[cli]") {
  const CliResult dedup = run_cli("enumerate n=4 --dedup");
  CHECK(dedup.exit_code == 0);
  CHECK(count_lines(dedup.output) == 11);
  CHECK(dedup.output.rfind("C?\n", 0) == 0);  // edgeless first
  CHECK(dedup.output.find("C~\n") != std::string::npos);  // complete last

  CHECK(count_lines(run_cli("enumerate n=3").output) == 8);
  CHECK(count_lines(run_cli("enumerate n=4 --dedup --connected").output) == 6);

  const CliResult again = run_cli("enumerate n=4 --dedup");
  CHECK(again.output == dedup.output);

  CHECK(run_cli("enumerate n=9 --dedup").exit_code == 2);
  CHECK(run_cli("enumerate n=x").exit_code == 2);
  CHECK(run_cli("enumerate 4").exit_code == 2);
  CHECK(run_cli("enumerate").exit_code == 2);
}

TEST_CASE("cli verify sweeps an enumerated corpus cleanly", "[cli]") {
  const CliResult r = run_cli("verify --enumerate n=5 --bounds B1 --alphas 3");
  CHECK(r.exit_code == 0);
  // No violations and no --witnesses: just the csv header.
  CHECK(r.output == std::string(sombor::kRecordCsvHeader) + "\n");

  const CliResult merged = run_cli("verify --enumerate n=4 --bounds B2 --alphas 0.5", true);
  CHECK(merged.exit_code == 0);
  CHECK(merged.output.find("swapped (erratum)") != std::string::npos);
  CHECK(merged.output.find("runtime:") != std::string::npos);
}

TEST_CASE("cli verify witness rows parse back losslessly", "[cli]") {
  const auto star = temp_file("cli_star", "Cs\n");
  const CliResult r = run_cli("verify --input " + star.string() +
                              " --bounds B1 --alphas 3 --witnesses");
  CHECK(r.exit_code == 0);
  const auto records = sombor::parse_record_csv(r.output);
  REQUIRE(records.size() == 1);
  CHECK(records[0].graph6 == "Cs");
  CHECK(records[0].n == 4);
  CHECK(records[0].m == 3);
  CHECK(records[0].check.bound_id == "B1");
  CHECK(records[0].check.alpha == 3.0);
  CHECK(records[0].check.direction == sombor::BoundDirection::GreaterEq);
  CHECK(records[0].check.holds);
  CHECK(records[0].check.equality_predicted);
  CHECK(records[0].check.equality_observed);

  // print -> parse -> print is the identity on the emitted document.
  std::string reprinted = sombor::kRecordCsvHeader;
  reprinted += '\n';
  for (const auto& rec : records) {
    reprinted += sombor::record_csv_row(rec);
    reprinted += '\n';
  }
  CHECK(reprinted == r.output);
  std::filesystem::remove(star);
}

TEST_CASE("cli verify random corpora are seed-deterministic", "[cli]") {
  const std::string args = "verify --random 10,0.3,5 --seed 7 --witnesses";
  const CliResult a = run_cli(args);
  const CliResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.size() > std::string(sombor::kRecordCsvHeader).size() + 1);

  const CliResult other_seed = run_cli("verify --random 10,0.3,5 --seed 8 --witnesses");
  CHECK(other_seed.output != a.output);
}

TEST_CASE("cli verify json marks swapped regimes", "[cli]") {
  const CliResult r =
      run_cli("verify --enumerate n=4 --bounds B2 --alphas 0.5,2 --format json");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  REQUIRE(doc.contains("reports"));
  REQUIRE(doc["reports"].size() == 2);
  const auto& swapped = doc["reports"][0];
  CHECK(swapped["alpha"].get<double>() == 0.5);
  CHECK(swapped["note"] == "swapped (erratum)");
  CHECK(swapped["graphs_checked"].get<int>() > 0);
  CHECK(swapped["violation_count"].get<int>() == 0);
  const auto& straight = doc["reports"][1];
  CHECK(straight["alpha"].get<double>() == 2.0);
  CHECK_FALSE(straight.contains("note"));
}

TEST_CASE("cli verify usage contract", "[cli]") {
  // Exactly one corpus source.
  CHECK(run_cli("verify").exit_code == 2);
  CHECK(run_cli("verify --enumerate n=4 --random 5,0.5,2").exit_code == 2);
  CHECK(run_cli("verify --bounds B9 --enumerate n=4").exit_code == 2);
  CHECK(run_cli("verify --random 5,0.5").exit_code == 2);
  CHECK(run_cli("verify --enumerate n=8").exit_code == 2);
}

TEST_CASE("cli verify self-test corruption trips violations", "[cli]") {
  const CliResult r = run_cli("verify --enumerate n=4 --self-test-corrupt");
  CHECK(r.exit_code == 1);
  // Violation rows are always included; every one is a B0b record.
  const auto records = sombor::parse_record_csv(r.output);
  REQUIRE(!records.empty());
  for (const auto& rec : records) {
    CHECK(rec.check.bound_id == "B0b");
    CHECK_FALSE(rec.check.holds);
  }
}

TEST_CASE("cli output redirection writes the same bytes", "[cli]") {
  const auto out_path = std::filesystem::temp_directory_path() /
                        ("cli_out." + std::to_string(::getpid()) + ".csv");
  const CliResult direct = run_cli("compute --family path --params 4 --alphas 1");
  const CliResult redirected = run_cli("compute --family path --params 4 --alphas 1 --output " +
                                       out_path.string());
  CHECK(redirected.exit_code == 0);
  CHECK(redirected.output.empty());
  std::ifstream in(out_path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == direct.output);
  std::filesystem::remove(out_path);
}

TEST_CASE("cli families reports the path closed-form erratum", "[cli]") {
  const CliResult r = run_cli("families --family path --params 4 --alphas 1,2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("family,n,alpha,closed_form,direct,abs_diff,paper_variant,paper_abs_diff,note\n",
                       0) == 0);
  CHECK(r.output.find("path,4,2,18,18,0,14,4,erratum\n") != std::string::npos);
  // At alpha = 1 the variants agree: no erratum flag on that row, so the
  // whole document carries exactly one flagged row (the alpha = 2 one).
  CHECK(r.output.find("path,4,1,7.30056307975,7.30056307975,") != std::string::npos);
  std::size_t errata = 0;
  for (std::size_t pos = r.output.find("erratum"); pos != std::string::npos;
       pos = r.output.find("erratum", pos + 1))
    ++errata;
  CHECK(errata == 1);

  const CliResult complete = run_cli("families --family complete --params 6 --alphas 2");
  CHECK(complete.exit_code == 0);
  CHECK(complete.output.find("complete,6,2,") != std::string::npos);
  CHECK(complete.output.find(",erratum") == std::string::npos);

  CHECK(run_cli("families --family path --params 1").exit_code == 2);
  CHECK(run_cli("families --family star --params 3").exit_code == 2);
  CHECK(run_cli("families --family path").exit_code == 2);
}
