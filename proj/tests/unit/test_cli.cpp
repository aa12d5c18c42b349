// Copyright 2026 The Loom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <sstream>

#include <sys/wait.h>

#include "fixtures.hpp"
#include "loom/cli.hpp"
#include "loom/io.hpp"
#include "loom/ppm.hpp"
#include "loom/wif.hpp"

using namespace loom;
using namespace loom::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return fixture_path(name).string(); }

std::vector<std::string> encode_args(const std::string& prefix) {
  return {"encode", "--questionnaire", fx(prefix + "_questionnaire.json"), "--responses",
          fx(prefix + "_responses.csv"), "--palette", fx(prefix + "_palette.json")};
}

std::vector<std::string> with(std::vector<std::string> args, const std::vector<std::string>& more) {
  args.insert(args.end(), more.begin(), more.end());
  return args;
}

std::string answers_only(const std::string& csv) {
  std::istringstream in(csv);
  std::string out;
  for (std::string line; std::getline(in, line);) out += line.substr(line.find(',')) + "\n";
  return out;
}

}  // namespace

TEST_CASE("encode desk fixtures to WIF") {
  TempDir dir;
  const auto r = run(with(encode_args("desk"), {"--out-wif", (dir / "d.wif").string()}));
  CHECK(r.code == 0);
  CHECK(r.out.find("7 picks (1 boundary)") != std::string::npos);
  const auto parsed = parse_wif(read_text_file(dir / "d.wif"));
  const auto records = desk_records();
  const auto desk = encode_session(desk_questionnaire(), desk_palette(), records);
  REQUIRE(parsed.draft.picks.size() == desk.picks.size());
  for (std::size_t i = 0; i < desk.picks.size(); ++i) {
    CHECK(parsed.draft.picks[i].color.rgb == desk.picks[i].color.rgb);
  }
  CHECK(parsed.draft.warp_ends == 24);
}

TEST_CASE("outputs are deterministic") {
  TempDir dir;
  for (const char* n : {"1", "2"}) {
    const std::string s(n);
    REQUIRE(run(with(encode_args("desk"), {"--out-wif", (dir / (s + ".wif")).string(), "--out-svg",
                                          (dir / (s + ".svg")).string(), "--out-ppm",
                                          (dir / (s + ".ppm")).string(), "--wif-date", "2026-10-16"}))
                .code == 0);
  }
  for (const char* ext : {".wif", ".svg", ".ppm"}) {
    CHECK(read_text_file(dir / (std::string("1") + ext)) == read_text_file(dir / (std::string("2") + ext)));
  }
  CHECK(read_text_file(dir / "1.wif").find("Date=2026-10-16") != std::string::npos);
}

TEST_CASE("28 x 8 chart decodes to 28 rows of 9 columns") {
  TempDir dir;
  REQUIRE(run(with(encode_args("ward"), {"--out-ppm", (dir / "c.ppm").string(), "--cell-px", "6"})).code == 0);
  const auto r = run({"decode", "--image", (dir / "c.ppm").string(), "--geometry", "251,24,0,0,6,6",
                      "--questionnaire", fx("ward_questionnaire.json"), "--palette", fx("ward_palette.json"),
                      "--out", (dir / "out.csv").string(), "--diagnostics", (dir / "diag.json").string()});
  CHECK(r.code == 0);
  const auto csv = read_text_file(dir / "out.csv");
  const auto decoded = parse_responses_csv(csv, 8);
  CHECK(decoded.size() == 28);
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(std::count(header.begin(), header.end(), ',') == 8);
  CHECK(answers_only(csv) == answers_only(read_text_file(fixture_path("ward_responses.csv"))));
  CHECK(read_json_file(dir / "diag.json")["diagnostics"].empty());
}

TEST_CASE("decode with a failed block exits 3") {
  TempDir dir;
  const auto records = desk_records();
  auto d = encode_session(desk_questionnaire(), desk_palette(), records);
  d.picks.erase(d.picks.begin() + 5);
  write_text_file(dir / "short.ppm", write_ppm(rasterize(render_chart(d), 5)));
  const auto r = run({"decode", "--image", (dir / "short.ppm").string(), "--geometry", "6,24,0,0,5,5",
                      "--questionnaire", fx("desk_questionnaire.json"), "--palette", fx("desk_palette.json"),
                      "--out", (dir / "out.csv").string()});
  CHECK(r.code == 3);
  CHECK(r.err.find("BlockLengthMismatch") != std::string::npos);
  CHECK(parse_responses_csv(read_text_file(dir / "out.csv"), 3).size() == 1);
}

TEST_CASE("exit codes") {
  TempDir dir;
  auto bogus = run({"--bogus"});
  CHECK(bogus.code == 2);
  CHECK(bogus.err.find("Usage") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"encode", "--questionnaire", fx("desk_questionnaire.json")}).code == 2);
  CHECK(run(with(encode_args("desk"), {"--warp-ends", "0"})).code == 2);
  CHECK(run({"decode", "--image", "x.ppm", "--geometry", "1,2,3", "--questionnaire",
             fx("desk_questionnaire.json"), "--palette", fx("desk_palette.json"), "--out",
             (dir / "o.csv").string()})
            .code == 2);
  CHECK(run({"--help"}).code == 0);

  auto missing = encode_args("desk");
  missing[4] = (dir / "absent.csv").string();
  const auto io = run(missing);
  CHECK(io.code == 1);
  CHECK(io.err.find("IoError") != std::string::npos);

  write_text_file(dir / "bad.csv", "participant_id,q1,q2,q3\nA,0,1,9\n");
  auto invalid = encode_args("desk");
  invalid[4] = (dir / "bad.csv").string();
  CHECK(run(invalid).code == 1);

  auto small = encode_args("ward");
  small[6] = fx("desk_palette.json");
  const auto too_small = run(small);
  CHECK(too_small.code == 1);
  CHECK(too_small.err.find("PaletteTooSmall") != std::string::npos);

  write_text_file(dir / "junk.ppm", "P9 nope");
  CHECK(run({"decode", "--image", (dir / "junk.ppm").string(), "--geometry", "7,24,0,0,10,10",
             "--questionnaire", fx("desk_questionnaire.json"), "--palette", fx("desk_palette.json"),
             "--out", (dir / "o.csv").string()})
            .code == 1);
}

TEST_CASE("validate and report") {
  TempDir dir;
  auto ok = run({"validate", "--questionnaire", fx("desk_questionnaire.json"), "--palette",
                 fx("desk_palette.json"), "--responses", fx("desk_responses.csv")});
  CHECK(ok.code == 0);
  CHECK(ok.out.rfind("ok:", 0) == 0);
  auto close = run({"validate", "--questionnaire", fx("desk_questionnaire.json"), "--palette",
                    fx("desk_palette.json"), "--min-distance", "200"});
  CHECK(close.code == 1);
  CHECK(close.err.find("ColorsTooClose") != std::string::npos);
  write_text_file(dir / "bad.csv", "participant_id,q1,q2,q3\nA,0,1\n");
  CHECK(run({"validate", "--questionnaire", fx("desk_questionnaire.json"), "--palette",
             fx("desk_palette.json"), "--responses", (dir / "bad.csv").string()})
            .code == 1);

  const auto report = run({"report", "--responses", fx("desk_responses.csv"), "--questionnaire",
                           fx("desk_questionnaire.json")});
  CHECK(report.code == 0);
  CHECK(report.out.find("participants: 2") != std::string::npos);
}

TEST_CASE("the installed binary reports exit codes") {
  const std::string cli = LOOM_CLI_PATH;
  auto status = [](const std::string& cmd) {
    const int raw = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status(cli + " --bogus") == 2);
  CHECK(status(cli + " report --responses /nonexistent.csv --questionnaire " + fx("desk_questionnaire.json")) == 1);
  CHECK(status(cli + " serve --port 0") == 2);
}
