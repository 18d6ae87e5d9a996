// Part of the Auris project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end checks that spawn the real binary. AURIS_CLI_PATH is injected
// by the build.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>

#include <json.hpp>

#include "auris/audio/wav.hpp"
#include "auris/data/manifest.hpp"
#include "auris/nn/mobilenet.hpp"
#include "auris/nn/weights_io.hpp"
#include "support/synth.hpp"

using namespace auris;
using namespace auris::testing;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out_file =
      fs::temp_directory_path() /
      ("auris_cli_out_" + std::to_string(counter++) + ".txt");
  const std::string command = std::string(AURIS_CLI_PATH) + " " + args +
                              " > " + out_file.string() + " 2>/dev/null";
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_file);
  result.output.assign((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
  fs::remove(out_file);
  return result;
}

std::string file_text(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

// Shared fixture: tiny synthetic source corpora plus a random model.
struct CliFixture {
  fs::path root;
  fs::path sources_json;
  fs::path model_path;
  fs::path clip_path;

  CliFixture() {
    root = fs::temp_directory_path() / "auris_cli_fixture";
    if (fs::exists(root / "sources.json")) {
      sources_json = root / "sources.json";
      model_path = root / "model.weights";
      clip_path = root / "clip10s.wav";
      return;  // already built by an earlier test case
    }
    fs::create_directories(root);

    // One 701 s speech recording -> 70 slices.
    audio::Waveform speech = make_noise(701.0, 0.21, 9001);
    fs::create_directories(root / "speech");
    audio::write_wav(speech, root / "speech/session0.wav");

    const struct {
      const char* label;
      double amplitude;
    } envs[] = {
        {"in_traffic", 0.05},   {"in_vehicle", 0.06},
        {"music", 0.30},        {"quiet_indoors", 0.02},
        {"reverberant_environment", 0.07}, {"wind_turbulence", 0.08},
    };
    nlohmann::ordered_json env_list = nlohmann::ordered_json::array();
    for (const auto& env : envs) {
      const fs::path dir = root / env.label;
      fs::create_directories(dir);
      for (int i = 0; i < 20; ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "%s_%02d.wav", env.label, i);
        audio::write_wav(
            make_noise(10.0, env.amplitude,
                       fnv1a64(env.label) + static_cast<std::uint64_t>(i)),
            dir / name);
      }
      // Music is levelled by its own RMS; recorded scenes share the
      // cocktail-party constant.
      const bool self_levelled = std::string(env.label) == "music";
      env_list.push_back(
          {{"label", env.label},
           {"dir", env.label},
           {"level_source", self_levelled ? env.label : "cocktail_party"}});
    }
    // Cocktail party: 10 clips, standardised by its own level.
    fs::create_directories(root / "cocktail_party");
    for (int i = 0; i < 10; ++i) {
      char name[32];
      std::snprintf(name, sizeof(name), "cp_%02d.wav", i);
      audio::write_wav(make_noise(10.0, 0.04, 7000 + i),
                       root / "cocktail_party" / name);
    }
    env_list.push_back({{"label", "cocktail_party"},
                        {"dir", "cocktail_party"},
                        {"level_source", "cocktail_party"}});

    nlohmann::ordered_json sources;
    sources["speech"] = {{"files", {"speech/session0.wav"}}};
    sources["environments"] = std::move(env_list);
    sources_json = root / "sources.json";
    std::ofstream(sources_json) << sources.dump(2);

    auto model = nn::make_classifier(14, [] {
      std::vector<std::string> names;
      for (auto label : data::all_scene_labels()) {
        names.emplace_back(data::to_string(label));
      }
      return names;
    }());
    nn::randomize(model, 5, nn::InitScheme::FanIn);
    model_path = root / "model.weights";
    nn::save_weights(model, model_path, nn::Dtype::F32);

    clip_path = root / "clip10s.wav";
    audio::write_wav(make_noise(10.0, 0.4, 31415), clip_path);
  }
};

}  // namespace

TEST_CASE("usage errors exit with code 1") {
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("no-such-command").exit_code == 1);
  CHECK(run_cli("eval --split bogus --model x --dataset y").exit_code == 1);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("help output documents every flag the suite relies on") {
  const auto top = run_cli("--help");
  CHECK(top.exit_code == 0);
  for (const char* cmd :
       {"build-dataset", "train", "eval", "infer", "bench", "inspect-model",
        "inspect-features"}) {
    CHECK(top.output.find(cmd) != std::string::npos);
  }
  const struct {
    const char* cmd;
    std::vector<const char*> flags;
  } expectations[] = {
      {"build-dataset", {"--sources", "--out", "--interfering-quota"}},
      {"train",
       {"--dataset", "--out", "--backbone", "--random-backbone-seed",
        "--backbone-init", "--learning-rate", "--max-epochs", "--batch-size",
        "--focal-alpha", "--focal-gamma", "--label-smoothing", "--no-augment",
        "--head-init", "--save-dtype"}},
      {"eval", {"--model", "--dataset", "--split", "--out", "--gain-sweep"}},
      {"infer", {"--model", "--wav", "--format", "--gain-db", "--aggregate"}},
      {"bench", {"--model", "--out", "--durations", "--repeats"}},
      {"inspect-model", {"--model", "--json"}},
      {"inspect-features", {"--wav", "--out", "--max-patches"}},
  };
  for (const auto& e : expectations) {
    const auto help = run_cli(std::string(e.cmd) + " --help");
    CHECK(help.exit_code == 0);
    for (const char* flag : e.flags) {
      INFO(e.cmd << " should document " << flag);
      CHECK(help.output.find(flag) != std::string::npos);
    }
  }
}

TEST_CASE("data errors exit with code 2") {
  CliFixture fx;
  CHECK(run_cli("inspect-model --model /nonexistent.weights").exit_code == 2);
  CHECK(run_cli("infer --model " + fx.model_path.string() +
                " --wav /nonexistent.wav")
            .exit_code == 2);

  const fs::path bogus = fx.root / "bogus.weights";
  std::ofstream(bogus, std::ios::binary) << "XXXXGARBAGE";
  CHECK(run_cli("inspect-model --model " + bogus.string()).exit_code == 2);
}

TEST_CASE("build-dataset is deterministic and complete") {
  CliFixture fx;
  const fs::path ds1 = fx.root / "ds1";
  const fs::path ds2 = fx.root / "ds2";

  const auto r1 = run_cli("--seed 7 build-dataset --sources " +
                          fx.sources_json.string() + " --out " + ds1.string());
  REQUIRE(r1.exit_code == 0);
  const auto r2 = run_cli("--seed 7 build-dataset --sources " +
                          fx.sources_json.string() + " --out " + ds2.string());
  REQUIRE(r2.exit_code == 0);

  CHECK(file_text(ds1 / "manifest.json") == file_text(ds2 / "manifest.json"));
  CHECK(file_text(ds1 / "manifest.csv") == file_text(ds2 / "manifest.csv"));
  CHECK(fs::exists(ds1 / "config.json"));

  const auto manifest = data::load_manifest_json(ds1 / "manifest.json");
  // 6 envs x 20 clips (half mixed) + 10 cocktail + 10 leftover speech.
  CHECK(manifest.clips.size() == 140);
  std::map<data::SceneLabel, int> counts;
  for (const auto& c : manifest.clips) ++counts[c.label];
  CHECK(counts[data::SceneLabel::InTraffic] == 10);
  CHECK(counts[data::SceneLabel::SpeechInTraffic] == 10);
  CHECK(counts[data::SceneLabel::CocktailParty] == 10);
  CHECK(counts[data::SceneLabel::InterferingSpeakers] == 10);

  // Standardisation bookkeeping in the manifest.
  CHECK(manifest.reference_rms > 0.0);
  CHECK(manifest.per_corpus_rms.count("cocktail_party") == 1);
  CHECK(manifest.per_corpus_rms.count("music") == 1);
}

TEST_CASE("train, eval, infer, bench, inspect round trip") {
  CliFixture fx;

  // A hand-written manifest of short clips keeps backbone passes cheap:
  // 14 labels x (2 train + 1 validation + 1 test).
  const fs::path ds = fx.root / "tiny_ds";
  fs::create_directories(ds / "clips");
  data::DatasetManifest manifest;
  manifest.reference_rms = 0.2;
  for (int label = 0; label < 14; ++label) {
    for (int i = 0; i < 4; ++i) {
      data::ClipRecord rec;
      rec.clip_id = std::string(data::to_string(
                        static_cast<data::SceneLabel>(label))) +
                    "_" + std::to_string(i);
      rec.path = "clips/" + rec.clip_id + ".wav";
      rec.label = static_cast<data::SceneLabel>(label);
      rec.split = i < 2 ? data::Split::Train
                        : (i == 2 ? data::Split::Validation
                                  : data::Split::Test);
      rec.duration_s = 1.0;
      if (data::is_speech_in(rec.label)) {
        rec.snr_db = 0.0;
        rec.speech_source =
            data::SpeechRef{"synthetic", 1.0 + 100.0 * label + i};
      }
      if (rec.label != data::SceneLabel::InterferingSpeakers) {
        rec.environment_source = "synthetic";
      }
      const double lo = 150.0 + 500.0 * label;
      audio::write_wav(make_band_noise(1.0, lo, lo + 450.0, 0.5,
                                       fnv1a64(rec.clip_id)),
                       ds / rec.path);
      manifest.clips.push_back(std::move(rec));
    }
  }
  data::save_manifest_json(manifest, ds / "manifest.json");

  const fs::path run = fx.root / "run1";
  const auto train_result = run_cli(
      "--seed 11 train --dataset " + ds.string() + " --out " + run.string() +
      " --random-backbone-seed 3 --backbone-init fan-in --head-init zero" +
      " --learning-rate 0.005 --max-epochs 2 --batch-size 8 --no-augment");
  REQUIRE(train_result.exit_code == 0);
  CHECK(fs::exists(run / "best.weights"));
  CHECK(fs::exists(run / "final.weights"));
  CHECK(fs::exists(run / "config.json"));
  const auto history = file_text(run / "history.csv");
  CHECK(history.find("epoch,lr,train_loss,val_loss,val_map,val_acc") == 0);

  const fs::path eval_dir = fx.root / "eval1";
  const auto eval_result = run_cli(
      "eval --model " + (run / "best.weights").string() + " --dataset " +
      ds.string() + " --split test --out " + eval_dir.string());
  REQUIRE(eval_result.exit_code == 0);
  const auto report =
      nlohmann::json::parse(file_text(eval_dir / "report.json"));
  CHECK(report["map"].get<double>() >= 0.0);
  CHECK(report["map"].get<double>() <= 1.0);
  // 14 test clips of 1 s -> 2 windows each.
  CHECK(report["window_count"].get<int>() == 28);
  CHECK(fs::exists(eval_dir / "confusion.csv"));
  CHECK(fs::exists(eval_dir / "pr_curves.csv"));
  CHECK(fs::exists(eval_dir / "plots.svg"));

  const fs::path sweep_dir = fx.root / "eval_sweep";
  const auto sweep_result = run_cli(
      "eval --gain-sweep --model " + (run / "best.weights").string() +
      " --dataset " + ds.string() + " --split test --out " +
      sweep_dir.string());
  REQUIRE(sweep_result.exit_code == 0);
  const auto sweep_csv = file_text(sweep_dir / "gain_sweep.csv");
  int sweep_lines = 0;
  for (char ch : sweep_csv) sweep_lines += ch == '\n';
  CHECK(sweep_lines == 10);  // header + 9 gain rows
  CHECK(sweep_csv.find("gain_db,map,accuracy") == 0);

  // infer: a 10 s clip must produce 20 windows of 14 scores.
  const auto infer_json = run_cli("infer --model " + fx.model_path.string() +
                                  " --wav " + fx.clip_path.string());
  REQUIRE(infer_json.exit_code == 0);
  const auto parsed = nlohmann::json::parse(infer_json.output);
  REQUIRE(parsed["windows"].size() == 20);
  for (const auto& row : parsed["windows"]) {
    CHECK(row["scores"].size() == 14);
  }

  const auto infer_csv =
      run_cli("infer --format csv --aggregate softmax --model " +
              fx.model_path.string() + " --wav " + fx.clip_path.string());
  REQUIRE(infer_csv.exit_code == 0);
  int lines = 0;
  for (char ch : infer_csv.output) lines += ch == '\n';
  CHECK(lines == 22);  // header + 20 windows + softmax row
  double softmax_sum = 0.0;
  {
    const auto pos = infer_csv.output.rfind("softmax");
    std::string row = infer_csv.output.substr(pos + 8);
    for (std::size_t start = 0; start < row.size();) {
      const auto comma = row.find(',', start);
      softmax_sum += std::atof(row.substr(start, comma - start).c_str());
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  CHECK(softmax_sum == doctest::Approx(1.0).epsilon(1e-4));

  // bench on short durations.
  const fs::path bench_dir = fx.root / "bench1";
  const auto bench_result =
      run_cli("bench --model " + fx.model_path.string() +
              " --durations 1,2 --repeats 1 --out " + bench_dir.string());
  REQUIRE(bench_result.exit_code == 0);
  const auto latency =
      nlohmann::json::parse(file_text(bench_dir / "latency.json"));
  CHECK(latency["durations"].size() == 2);
  CHECK(latency["model_load_ms"].get<double>() > 0.0);

  // inspect-model reports the frozen parameter count.
  const auto inspect = run_cli("inspect-model --model " +
                               fx.model_path.string());
  REQUIRE(inspect.exit_code == 0);
  CHECK(inspect.output.find("3242638") != std::string::npos);

  // inspect-features dumps one patch file per window.
  const fs::path feats = fx.root / "feats";
  const auto feat_result =
      run_cli("inspect-features --wav " + fx.clip_path.string() + " --out " +
              feats.string() + " --max-patches 3");
  REQUIRE(feat_result.exit_code == 0);
  CHECK(fs::exists(feats / "patch_000.bin"));
  CHECK(fs::exists(feats / "patch_002.bin"));
  CHECK(fs::exists(feats / "summary.txt"));
}
