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

#include "loom/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdlib>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "loom/decoder.hpp"
#include "loom/draft.hpp"
#include "loom/http_api.hpp"
#include "loom/io.hpp"
#include "loom/ppm.hpp"
#include "loom/report.hpp"
#include "loom/wif.hpp"

namespace loom {

namespace {

std::atomic<bool> g_interrupted{false};

extern "C" void on_interrupt(int) { g_interrupted = true; }

struct EncodeArgs {
  std::string questionnaire;
  std::string responses;
  std::string palette;
  std::string out_wif;
  std::string out_svg;
  std::string out_ppm;
  int warp_ends = 24;
  int picks_per_answer = 1;
  int boundary_picks = 1;
  int rows_per_pick = 1;
  int cell_px = 10;
  int svg_cell_px = 10;
  std::string ppm_format = "binary";
  std::string wif_date = "1970-01-01";
  double min_distance = kDefaultMinDistance;
};

struct DecodeArgs {
  std::string image;
  std::string geometry;
  std::string questionnaire;
  std::string palette;
  std::string out;
  std::string diagnostics;
  int rows_per_pick = 1;
  int picks_per_answer = 1;
  int boundary_picks = 1;
  double confidence_threshold = 0.6;
};

struct ReportArgs {
  std::string responses;
  std::string questionnaire;
};

struct ValidateArgs {
  std::string questionnaire;
  std::string palette;
  std::string responses;
  double min_distance = kDefaultMinDistance;
};

struct ServeArgs {
  int port = 8080;
  std::string host = "0.0.0.0";
  std::string data_dir;
  std::string static_dir;
};

int do_encode(const EncodeArgs& a, std::ostream& out) {
  const auto q = questionnaire_from_json(read_json_file(a.questionnaire));
  const auto palette = palette_from_json(read_json_file(a.palette));
  const auto records = parse_responses_csv(read_text_file(a.responses), q.question_count());
  const auto draft = encode_session(q, palette, records,
                                    {a.warp_ends, a.picks_per_answer, a.boundary_picks},
                                    a.min_distance);
  const auto chart = render_chart(draft, {a.rows_per_pick});

  if (!a.out_wif.empty()) {
    WifMetadata meta;
    meta.date = a.wif_date;
    write_text_file(a.out_wif, emit_wif(draft, palette, meta));
  }
  if (!a.out_svg.empty()) write_text_file(a.out_svg, export_svg(chart, a.svg_cell_px));
  if (!a.out_ppm.empty()) {
    const auto format = a.ppm_format == "ascii" ? PpmFormat::Ascii : PpmFormat::Binary;
    write_text_file(a.out_ppm,
                    write_ppm(rasterize(chart, static_cast<std::size_t>(a.cell_px)), format));
  }
  out << "encoded " << records.size() << " participant(s) x " << q.question_count()
      << " question(s): " << draft.picks.size() << " picks (" << draft.boundary_pick_count()
      << " boundary), chart " << chart.rows() << "x" << chart.cols() << "\n";
  if (!a.out_ppm.empty()) {
    out << "decode geometry: " << chart.rows() << "," << chart.cols() << ",0,0," << a.cell_px
        << "," << a.cell_px << "\n";
  }
  return kExitOk;
}

int do_decode(const DecodeArgs& a, std::ostream& out, std::ostream& err) {
  const auto q = questionnaire_from_json(read_json_file(a.questionnaire));
  const auto palette = palette_from_json(read_json_file(a.palette));
  std::vector<ValidationError> errors = validate_questionnaire(q);
  auto pe = validate_palette(palette);
  errors.insert(errors.end(), pe.begin(), pe.end());
  if (!errors.empty()) throw ValidationFailure(std::move(errors));

  const auto geometry = parse_geometry(a.geometry);
  const auto image = read_ppm_file(a.image);
  DecodeConfig config;
  config.rows_per_pick = a.rows_per_pick;
  config.picks_per_answer = a.picks_per_answer;
  config.boundary_picks = a.boundary_picks;
  config.confidence_threshold = a.confidence_threshold;
  const auto result = decode_image(image, geometry, q, palette, config);

  write_text_file(a.out, write_responses_csv(result.records, q.question_count()));
  if (!a.diagnostics.empty()) {
    write_text_file(a.diagnostics, diagnostics_to_json(result).dump(2) + "\n");
  }
  for (const auto& d : result.diagnostics) {
    err << to_string(d.issue);
    if (d.block) err << " block " << *d.block;
    if (d.row) err << " row " << *d.row;
    err << ": " << d.detail << "\n";
  }
  out << "decoded " << result.records.size() << " record(s) from " << result.blocks
      << " block(s)\n";
  return result.any_block_failed() ? kExitPartialDecode : kExitOk;
}

int do_report(const ReportArgs& a, std::ostream& out) {
  const auto q = questionnaire_from_json(read_json_file(a.questionnaire));
  if (auto errors = validate_questionnaire(q); !errors.empty()) {
    throw ValidationFailure(std::move(errors));
  }
  const auto records = parse_responses_csv(read_text_file(a.responses), q.question_count());
  out << format_report(report_from_records(q, records), q);
  return kExitOk;
}

int do_validate(const ValidateArgs& a, std::ostream& out, std::ostream& err) {
  const auto q = questionnaire_from_json(read_json_file(a.questionnaire));
  const auto palette = palette_from_json(read_json_file(a.palette));
  std::vector<std::string> problems;
  for (const auto& e : validate_questionnaire(q)) problems.push_back("questionnaire: " + describe(e));
  for (const auto& e : validate_palette(palette, a.min_distance)) {
    problems.push_back("palette: " + describe(e));
  }
  for (const auto& e : validate_palette_coverage(palette, q)) {
    problems.push_back("palette: " + describe(e));
  }
  std::size_t record_count = 0;
  if (!a.responses.empty()) {
    const auto records = parse_responses_csv(read_text_file(a.responses), q.question_count());
    record_count = records.size();
    for (const auto& r : records) {
      for (const auto& e : validate_record(q, r)) {
        problems.push_back("responses: " + r.participant_id + ": " + describe(e));
      }
    }
  }
  if (!problems.empty()) {
    for (const auto& p : problems) err << p << "\n";
    return kExitFailure;
  }
  out << "ok: " << q.question_count() << " question(s), " << palette.option_colors.size()
      << " option color(s), minimum color distance " << min_pairwise_distance(palette);
  if (!a.responses.empty()) out << ", " << record_count << " record(s)";
  out << "\n";
  return kExitOk;
}

int do_serve(const ServeArgs& a, std::ostream& out, std::ostream& err) {
  std::string data_dir = a.data_dir;
  if (data_dir.empty()) {
    const char* env = std::getenv("LOOM_DATA_DIR");
    data_dir = env && *env ? env : "./data";
  }
  SessionStore store(data_dir);
  const std::size_t loaded = store.load_existing();
  HttpServer server(store, a.static_dir);

  g_interrupted = false;
  auto previous_int = std::signal(SIGINT, on_interrupt);
  auto previous_term = std::signal(SIGTERM, on_interrupt);
  std::atomic<bool> done{false};
  std::thread watcher([&] {
    while (!done) {
      if (g_interrupted) {
        server.stop();
        break;
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(100));
    }
  });

  out << "serving " << loaded << " session(s) from " << data_dir << " on " << a.host << ":"
      << a.port << std::endl;
  const bool ok = server.listen(a.host, a.port);
  done = true;
  watcher.join();
  std::signal(SIGINT, previous_int);
  std::signal(SIGTERM, previous_term);
  if (!ok && !g_interrupted) {
    err << "error: cannot listen on " << a.host << ":" << a.port << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compile questionnaire responses into weaving drafts and read them back.", "loom"};
  app.require_subcommand(1);

  EncodeArgs enc;
  auto* encode = app.add_subcommand("encode", "Encode responses into a draft, chart and image");
  encode->add_option("--questionnaire", enc.questionnaire, "Questionnaire JSON")->required();
  encode->add_option("--responses", enc.responses, "Responses CSV")->required();
  encode->add_option("--palette", enc.palette, "Palette JSON")->required();
  encode->add_option("--out-wif", enc.out_wif, "Write the WIF 1.1 draft here");
  encode->add_option("--out-svg", enc.out_svg, "Write the SVG chart here");
  encode->add_option("--out-ppm", enc.out_ppm, "Write the PPM chart image here");
  encode->add_option("--warp-ends", enc.warp_ends)->check(CLI::PositiveNumber)->capture_default_str();
  encode->add_option("--picks-per-answer", enc.picks_per_answer)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  encode->add_option("--boundary-picks", enc.boundary_picks)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  encode->add_option("--rows-per-pick", enc.rows_per_pick, "Chart rows per pick")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  encode->add_option("--cell-px", enc.cell_px, "PPM pixels per chart cell")
      ->check(CLI::Range(1, 200))
      ->capture_default_str();
  encode->add_option("--svg-cell-px", enc.svg_cell_px, "SVG units per chart cell")
      ->check(CLI::Range(1, 200))
      ->capture_default_str();
  encode->add_option("--ppm-format", enc.ppm_format)
      ->check(CLI::IsMember({"binary", "ascii"}))
      ->capture_default_str();
  encode->add_option("--wif-date", enc.wif_date, "Date line of the WIF header")
      ->capture_default_str();
  encode->add_option("--min-distance", enc.min_distance, "Minimum palette color distance")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  DecodeArgs dec;
  auto* decode = app.add_subcommand("decode", "Decode a rectified chart image into responses");
  decode->add_option("--image", dec.image, "PPM image (P3 or P6)")->required();
  decode->add_option("--geometry", dec.geometry, "rows,cols,origin_x,origin_y,cell_w,cell_h")
      ->required();
  decode->add_option("--questionnaire", dec.questionnaire)->required();
  decode->add_option("--palette", dec.palette)->required();
  decode->add_option("--out", dec.out, "Responses CSV to write")->required();
  decode->add_option("--diagnostics", dec.diagnostics, "Diagnostics JSON to write");
  decode->add_option("--rows-per-pick", dec.rows_per_pick)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  decode->add_option("--picks-per-answer", dec.picks_per_answer)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  decode->add_option("--boundary-picks", dec.boundary_picks)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  decode->add_option("--confidence-threshold", dec.confidence_threshold)
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();

  ReportArgs rep;
  auto* report = app.add_subcommand("report", "Print answer frequencies per question");
  report->add_option("--responses", rep.responses)->required();
  report->add_option("--questionnaire", rep.questionnaire)->required();

  ValidateArgs val;
  auto* validate = app.add_subcommand("validate", "Check questionnaire, palette and responses");
  validate->add_option("--questionnaire", val.questionnaire)->required();
  validate->add_option("--palette", val.palette)->required();
  validate->add_option("--responses", val.responses);
  validate->add_option("--min-distance", val.min_distance)
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  ServeArgs srv;
  auto* serve = app.add_subcommand("serve", "Run the session HTTP API");
  serve->add_option("--port", srv.port)->check(CLI::Range(1, 65535))->capture_default_str();
  serve->add_option("--host", srv.host)->capture_default_str();
  serve->add_option("--data-dir", srv.data_dir, "Session logs (default $LOOM_DATA_DIR or ./data)");
  serve->add_option("--static-dir", srv.static_dir, "Static files to serve at /");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*encode) return do_encode(enc, out);
    if (*decode) return do_decode(dec, out, err);
    if (*report) return do_report(rep, out);
    if (*validate) return do_validate(val, out, err);
    if (*serve) return do_serve(srv, out, err);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::InvalidArgument ? kExitUsage : kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace loom
