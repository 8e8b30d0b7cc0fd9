#include "cli.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = ekr::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(cell);
      cell.clear();
    } else if (c == '\n') {
      row.push_back(cell);
      rows.push_back(row);
      row.clear();
      cell.clear();
    } else {
      cell += c;
    }
  }
  return rows;
}

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

}  // namespace

TEST_CASE("documented examples") {
  auto matching = invoke({"count", "matching", "--n", "6", "--l", "3"});
  CHECK(matching.code == 0);
  CHECK(matching.out == "{\"count\":\"48\"}\n");

  auto packing = invoke({"gamma", "packing", "--graph", "K4"});
  CHECK(packing.code == 0);
  auto j = packing.json();
  CHECK(j["packing"] == 2);
  CHECK(j["witness"].size() == 2);
  CHECK(packing.out.rfind("{\"packing\":2,\"witness\":[", 0) == 0);

  auto two = invoke({"enumerate", "--n", "2"});
  CHECK(two.code == 0);
  CHECK(two.json()["count"] == "1");
  CHECK(two.json()["rows"].size() == 1);
}

TEST_CASE("counts are decimal strings") {
  // 4 * 30^26
  auto big = invoke({"count", "contain", "--n", "30", "--edges", "1-2,3-4"});
  CHECK(big.json()["count"] == "1016746331331600000000000000000000000000");
  auto at_least = invoke({"count", "at-least", "--n", "6", "--edges", "1-2,2-3,4-5,5-6", "--m", "3"});
  CHECK(at_least.code == 0);
  CHECK(at_least.json()["count"].is_string());
}

TEST_CASE("exit codes") {
  auto unknown = invoke({"frobnicate"});
  CHECK(unknown.code == 64);
  CHECK(unknown.json()["error"]["kind"] == "unknown_subcommand");
  CHECK(invoke({"count", "frobnicate"}).code == 64);

  auto cap = invoke({"enumerate", "--n", "9"});
  CHECK(cap.code == 2);
  CHECK(cap.json()["error"]["kind"] == "cap_exceeded");
  CHECK(cap.json()["error"]["cap"] == "enumeration cap");
  CHECK(cap.json()["error"]["limit"] == 8);

  CHECK(invoke({"enumerate", "--n", "5", "--enum-cap", "4"}).code == 2);
  CHECK(invoke({"count", "matching", "--n", "5", "--l", "3"}).code == 2);
  CHECK(invoke({"count", "matching", "--n", "5"}).code == 2);
  CHECK(invoke({"count", "contain", "--n", "5", "--edges", "1-2,2-3,1-3"}).code == 2);
  CHECK(invoke({"enumerate", "--n", "4", "--bogus"}).code == 2);
  CHECK(invoke({"enumerate", "--n", "4", "--format", "xml"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"count"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);

  auto ie = invoke({"count", "at-least", "--n", "30", "--edges", "1-2,2-3,3-4", "--m", "1", "--ie-cap", "2"});
  CHECK(ie.code == 2);
  CHECK(ie.json()["error"]["cap"] == "inclusion-exclusion cap");
}

TEST_CASE("environment overrides caps") {
  setenv("EKR_ENUM_CAP", "3", 1);
  CHECK(invoke({"enumerate", "--n", "4"}).code == 2);
  CHECK(invoke({"enumerate", "--n", "4", "--enum-cap", "4"}).code == 0);
  setenv("EKR_ENUM_CAP", "zero", 1);
  CHECK(invoke({"enumerate", "--n", "4"}).code == 2);
  unsetenv("EKR_ENUM_CAP");
  CHECK(invoke({"enumerate", "--n", "4"}).code == 0);
}

TEST_CASE("csv and json carry the same values") {
  const std::vector<std::vector<std::string>> commands{
      {"family", "scan", "--n", "12", "--t", "3", "--j-max", "4"},
      {"count", "matching", "--n", "7", "--l", "2"},
      {"enumerate", "--n", "4"},
      {"sample", "--n", "9", "--seed", "5"},
      {"dt", "--n", "5", "--t", "1"},
      {"llll", "notstar", "--n", "7", "--edges", "1-2,3-4,5-6"},
  };
  for (const auto& command : commands) {
    auto as_json = invoke(command);
    auto with_csv = command;
    with_csv.insert(with_csv.end(), {"--format", "csv"});
    auto as_csv = invoke(with_csv);
    REQUIRE(as_json.code == 0);
    REQUIRE(as_csv.code == 0);
    const Json doc = as_json.json();
    const auto table = parse_csv(as_csv.out);
    const bool has_rows = doc.contains("rows");
    const Json rows = has_rows ? doc["rows"] : Json::array({doc});
    REQUIRE(table.size() == rows.size() + 1);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::size_t c = 0;
      for (const auto& [key, value] : rows[r].items()) {
        CHECK(table[0][c] == key);
        CHECK(table[r + 1][c] == cell(value));
        ++c;
      }
    }
  }
}

TEST_CASE("scan csv schema") {
  auto scan = invoke({"family", "scan", "--n", "12", "--t", "3", "--j-max", "2", "--format", "csv"});
  auto table = parse_csv(scan.out);
  CHECK(table[0] == std::vector<std::string>{"n", "t", "j", "size", "winner"});
  CHECK(table[1][4] == "true");
  CHECK(table[2][4] == "false");
}

TEST_CASE("determinism and timestamps") {
  const std::vector<std::string> command{"sample", "--n", "12", "--seed", "99"};
  CHECK(invoke(command).out == invoke(command).out);
  auto workers1 = invoke({"dt", "--n", "6", "--t", "1", "--workers", "1"});
  auto workers3 = invoke({"dt", "--n", "6", "--t", "1", "--workers", "3"});
  CHECK(workers1.out == workers3.out);
  CHECK(workers1.json()["value"] == "30");

  auto stamped = invoke({"count", "matching", "--n", "6", "--l", "3", "--timestamp"});
  CHECK(stamped.json().contains("timestamp"));
  auto quiet = invoke({"count", "matching", "--n", "6", "--l", "3", "--timestamp", "--reproducible"});
  CHECK(quiet.out == "{\"count\":\"48\"}\n");
}

TEST_CASE("spread command") {
  auto pass = invoke({"spread", "check", "--n", "6", "--r", "3", "--t", "5"});
  CHECK(pass.json()["verified"] == true);
  auto fail = invoke({"spread", "check", "--n", "6", "--r", "3.001", "--witness"});
  auto j = fail.json();
  CHECK(j["verified"] == false);
  CHECK(j["witness_edge_list"]["U"] == "1 2\n");
  CHECK(invoke({"spread", "check", "--n", "12", "--r", "6"}).json()["error"]["kind"] == "cap_exceeded");
}

TEST_CASE("gamma commands") {
  auto alpha = invoke({"gamma", "alpha", "--graph", "K4", "--t", "1"});
  CHECK(alpha.json()["value"] == 10);
  CHECK(alpha.json()["optimal"] == true);
  auto omega = invoke({"gamma", "omega", "--graph", "K5", "--t", "2", "--full"});
  CHECK(omega.json()["value"] == 5);
  CHECK(omega.json()["trees"].size() == 5);

  const std::string dump = "ekr_cli_gamma.bin";
  auto build = invoke({"gamma", "build", "--graph", "C5", "--t", "4", "--dump", dump});
  CHECK(build.json()["vertex_count"] == 5);
  CHECK(build.json()["edge_count"] == 10);
  std::ifstream in(dump, std::ios::binary);
  std::string magic(8, '\0');
  in.read(magic.data(), 8);
  CHECK(magic == "EKRGAMMA");
  in.close();
  std::remove(dump.c_str());

  const std::string edges = "ekr_cli_graph.txt";
  {
    std::ofstream out(edges);
    out << "# a 4-cycle with a chord\n1 2\n2 3\n3 4\n1 4\n1 3\n";
  }
  auto packing = invoke({"gamma", "packing", "--graph", edges});
  CHECK(packing.json()["packing"] == 1);
  std::remove(edges.c_str());
  CHECK(invoke({"gamma", "packing", "--graph", "missing-file"}).code == 2);
  CHECK(invoke({"gamma", "alpha", "--graph", "K6", "--t", "1", "--graph-cap", "100"}).code == 2);
}

TEST_CASE("family commands") {
  CHECK(invoke({"family", "size", "--kind", "stars-plus-edge", "--n", "6"}).json()["size"] == "436");
  CHECK(invoke({"family", "size", "--kind", "trivial", "--n", "6", "--edges", "1-2,3-4"}).json()["size"] == "144");
  CHECK(invoke({"family", "size", "--kind", "ntj", "--n", "15", "--t", "8", "--j", "1"}).json()["size"] ==
        "74631375");
  auto verify = invoke({"family", "verify", "--kind", "stars-plus-edge", "--n", "5"}).json();
  CHECK(verify["size_enumerated"] == "53");
  CHECK(verify["sizes_agree"] == true);
  CHECK(verify["pairwise_t_intersecting"] == true);
  auto threshold =
      invoke({"family", "verify", "--kind", "threshold", "--n", "6", "--edges", "1-2,2-3,4-5,5-6", "--m", "3"}).json();
  CHECK(threshold["t"] == 2);
  CHECK(threshold["pairwise_t_intersecting"] == true);

  const std::string spec = "ekr_cli_family.json";
  {
    std::ofstream out(spec);
    out << R"({"kind":"trivial","n":5,"t":2,"edges":[[1,2],[3,4]]})";
  }
  auto from_file = invoke({"family", "verify", "--spec", spec}).json();
  CHECK(from_file["size_formula"] == "20");
  CHECK(from_file["sizes_agree"] == true);
  std::remove(spec.c_str());
  CHECK(invoke({"family", "size", "--kind", "odd", "--n", "5"}).code == 2);

  auto star_shape = invoke({"family", "scan", "--n", "9", "--t", "2", "--j-max", "3", "--component-shape", "star"});
  CHECK(star_shape.json()["shape"] == "star");
}

TEST_CASE("remaining commands") {
  auto dt = invoke({"dt", "--n", "5", "--t", "2"}).json();
  CHECK(dt["value"] == "2");
  auto check = invoke({"llll", "check", "--p", "1/3,1/3", "--x", "2/3,2/3", "--dependency", "0-1"}).json();
  CHECK(check["holds"] == false);
  CHECK(check["failing_event"] == 0);
  CHECK(check["lower_bound"] == "1/9");
  auto line = invoke({"llll", "check", "--n", "8", "--edges", "1-2,3-4"}).json();
  CHECK(line["holds"] == true);
  auto notstar = invoke({"llll", "notstar", "--n", "7", "--edges", "1-2,3-4,5-6"}).json();
  CHECK(notstar["avoiding"] == "6125");
  auto star_like = invoke({"llll", "notstar", "--n", "7", "--edges", "1-2,2-3"});
  CHECK(star_like.code == 2);
  CHECK(star_like.json()["error"]["message"].get<std::string>().find("{1,2}") != std::string::npos);

  auto search = invoke({"search", "max", "--n", "4", "--t", "1"}).json();
  CHECK(search["size"] == 10);
  CHECK(search["stars_plus_edge_size"] == "10");
  auto sample = invoke({"sample", "--n", "7", "--seed", "3"}).json();
  CHECK(sample["edges"].size() == 6);
  CHECK(invoke({"sample", "--n", "7", "--seed", "3", "--format", "text"}).out.find("edges: [[") != std::string::npos);
}
