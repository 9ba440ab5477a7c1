// soleidx: shoe-sole print indexing pipeline.
//
// Each pipeline stage (convert, enhance, degrade, restore, segment) is its
// own subcommand so stages can be run and inspected independently; `pipeline`
// chains them and `index` manages the threshold-keyed catalog.

#include <CLI11.hpp>

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "soleidx/catalog.hpp"
#include "soleidx/codec.hpp"
#include "soleidx/corpus.hpp"
#include "soleidx/enhance.hpp"
#include "soleidx/error.hpp"
#include "soleidx/restore.hpp"
#include "soleidx/segment.hpp"
#include "soleidx/util.hpp"

namespace {

using namespace soleidx;
namespace fs = std::filesystem;

GrayImage load_gray(const std::string& path) {
  return decode_any_to_gray(read_file(path));
}

void write_pgm(const std::string& path, const GrayImage& img) {
  write_file_atomic(path, encode_pgm(img));
}

std::string segment_summary(const OtsuResult& o) {
  return "t=" + std::to_string(o.t) + " tau=" + format_tau(o.t, o.levels) +
         " sigma_b2=" + format_double(o.sigma_b2);
}

// Restoration stage flags shared by `restore`, `index add` and `pipeline`.
struct RestoreFlags {
  std::string method = "wiener";
  int blur_len = 7;
  double blur_angle = 0.0;
  double k = 0.01;
  double gamma = 0.01;

  void attach(CLI::App* cmd, bool with_toggle, bool* toggle) {
    if (with_toggle) {
      cmd->add_flag("--restore", *toggle,
                    "run the restoration stage before segmentation");
    }
    cmd->add_option("--method", method, "restoration method")
        ->check(CLI::IsMember({"wiener", "cls"}));
    cmd->add_option("--blur-len", blur_len, "motion blur length in pixels")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--blur-angle", blur_angle,
                    "motion blur angle in degrees, counterclockwise");
    cmd->add_option("--k", k, "Wiener noise-to-signal constant")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--gamma", gamma, "CLS regularization weight")
        ->check(CLI::NonNegativeNumber);
  }

  RestorationSpec to_spec() const {
    RestorationParams params;
    params.method = parse_method(method);
    params.k = k;
    params.gamma = gamma;
    return RestorationSpec{params, motion_blur_psf(blur_len, blur_angle)};
  }
};

const CLI::Validator kTokenValidator(
    [](std::string& s) -> std::string {
      if (s.empty()) return std::string("must not be empty");
      for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
          return std::string("must not contain whitespace");
        }
      }
      return std::string();
    },
    "TOKEN");

const CLI::Validator kTimestampValidator(
    [](std::string& s) -> std::string {
      if (!is_valid_timestamp(s)) {
        return std::string("must be YYYY-MM-DDThh:mm:ssZ");
      }
      return std::string();
    },
    "TIMESTAMP");

const CLI::Validator kBrandValidator(
    [](std::string& s) -> std::string {
      for (char c : s) {
        if (static_cast<unsigned char>(c) < 0x20) {
          return std::string("must not contain control characters");
        }
      }
      return std::string();
    },
    "TEXT");

Catalog load_catalog_if_present(const std::string& db) {
  if (!fs::exists(db)) return Catalog{};
  return load_catalog(read_file(db));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"soleidx: index commercial shoe-sole prints by global threshold"};
  app.require_subcommand(1);

  // ---- convert ----
  auto* convert = app.add_subcommand(
      "convert", "decode BMP/PGM, reduce to grayscale, write PGM");
  std::string convert_in, convert_out;
  convert->add_option("input", convert_in, "input image (BMP or PGM)")->required();
  convert->add_option("-o,--out", convert_out, "output PGM path")->required();
  convert->callback([&] { write_pgm(convert_out, load_gray(convert_in)); });

  // ---- enhance ----
  auto* enhance_cmd =
      app.add_subcommand("enhance", "histogram equalization");
  std::string enhance_in, enhance_out;
  enhance_cmd->add_option("input", enhance_in, "input image")->required();
  enhance_cmd->add_option("-o,--out", enhance_out, "output PGM path")->required();
  enhance_cmd->callback(
      [&] { write_pgm(enhance_out, equalize(load_gray(enhance_in))); });

  // ---- degrade ----
  auto* degrade_cmd = app.add_subcommand(
      "degrade", "simulate motion blur plus optional Gaussian noise");
  std::string degrade_in, degrade_out;
  int degrade_len = 7;
  double degrade_angle = 0.0;
  double degrade_sigma = 0.0;
  std::uint64_t degrade_seed = 0;
  degrade_cmd->add_option("input", degrade_in, "input image")->required();
  degrade_cmd->add_option("-o,--out", degrade_out, "output PGM path")->required();
  degrade_cmd->add_option("--blur-len", degrade_len, "motion blur length")
      ->check(CLI::PositiveNumber);
  degrade_cmd->add_option("--blur-angle", degrade_angle, "motion blur angle (deg)");
  degrade_cmd->add_option("--sigma", degrade_sigma, "noise standard deviation on [0,1]")
      ->check(CLI::NonNegativeNumber);
  degrade_cmd->add_option("--seed", degrade_seed, "noise generator seed");
  degrade_cmd->callback([&] {
    const BlurKernel psf = motion_blur_psf(degrade_len, degrade_angle);
    write_pgm(degrade_out,
              degrade(load_gray(degrade_in), psf, degrade_sigma, degrade_seed));
  });

  // ---- restore ----
  auto* restore_cmd = app.add_subcommand(
      "restore", "Wiener or constrained-least-squares deconvolution");
  std::string restore_in, restore_out;
  RestoreFlags restore_flags;
  restore_cmd->add_option("input", restore_in, "input image")->required();
  restore_cmd->add_option("-o,--out", restore_out, "output PGM path")->required();
  restore_flags.attach(restore_cmd, false, nullptr);
  restore_cmd->callback([&] {
    const RestorationSpec spec = restore_flags.to_spec();
    write_pgm(restore_out, restore(load_gray(restore_in), spec.psf, spec.params));
  });

  // ---- segment ----
  auto* segment_cmd = app.add_subcommand(
      "segment", "Otsu global threshold; prints t, tau and sigma_b2");
  std::string segment_in, segment_binary_out;
  segment_cmd->add_option("input", segment_in, "input image")->required();
  segment_cmd->add_option("--emit-binary", segment_binary_out,
                          "also write the binarized image as PGM");
  segment_cmd->callback([&] {
    const GrayImage img = load_gray(segment_in);
    const OtsuResult otsu = global_threshold_index(img);
    if (!segment_binary_out.empty()) {
      write_pgm(segment_binary_out, binarize(img, otsu.t).to_gray());
    }
    std::cout << segment_summary(otsu) << "\n";
  });

  // ---- index add / index query ----
  auto* index_cmd = app.add_subcommand("index", "catalog management");
  index_cmd->require_subcommand(1);

  auto* add_cmd = index_cmd->add_subcommand("add", "ingest a print into the catalog");
  std::string add_in, add_db, add_id, add_brand, add_created_at;
  bool add_restore = false;
  RestoreFlags add_restore_flags;
  add_cmd->add_option("input", add_in, "input image")->required();
  add_cmd->add_option("--db", add_db, "catalog file")->required();
  add_cmd->add_option("--id", add_id, "record id")->required()->check(kTokenValidator);
  add_cmd->add_option("--brand", add_brand, "brand text")->check(kBrandValidator);
  add_cmd->add_option("--created-at", add_created_at, "override record timestamp (UTC)")
      ->check(kTimestampValidator);
  add_restore_flags.attach(add_cmd, true, &add_restore);
  add_cmd->callback([&] {
    Catalog cat = load_catalog_if_present(add_db);
    if (cat.contains(add_id)) {
      throw Error(Errc::duplicate_id, "id '" + add_id + "' is already catalogued");
    }
    std::optional<RestorationSpec> spec;
    if (add_restore) spec = add_restore_flags.to_spec();
    const std::string created =
        add_created_at.empty() ? utc_timestamp_now() : add_created_at;
    const IndexRecord rec =
        ingest(read_file(add_in), add_id, add_brand, spec, created);
    cat = add_record(std::move(cat), rec);
    write_file_atomic(add_db, save_catalog(cat));
    std::cout << format_record(rec) << "\n";
  });

  auto* query_cmd =
      index_cmd->add_subcommand("query", "range query by threshold index");
  std::string query_db;
  double query_tau = 0.0, query_tol = 0.0;
  query_cmd->add_option("--db", query_db, "catalog file")->required();
  query_cmd->add_option("--tau", query_tau, "query threshold index in [0,1]")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  query_cmd->add_option("--tol", query_tol, "tolerance")
      ->required()
      ->check(CLI::NonNegativeNumber);
  query_cmd->callback([&] {
    const Catalog cat = load_catalog(read_file(query_db));
    for (const IndexRecord& rec : query_range(cat, query_tau, query_tol)) {
      std::cout << format_record(rec) << "\n";
    }
  });

  // ---- gen-corpus ----
  auto* gen_cmd = app.add_subcommand(
      "gen-corpus", "generate synthetic two-tone sole prints for tests/demos");
  std::string gen_out;
  int gen_count = 0;
  std::uint64_t gen_seed = 0;
  gen_cmd->add_option("--out", gen_out, "output directory")->required();
  gen_cmd->add_option("--count", gen_count, "number of prints")
      ->required()
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen_seed, "generator seed");
  gen_cmd->callback([&] {
    fs::create_directories(gen_out);
    for (int i = 0; i < gen_count; ++i) {
      char name[32];
      std::snprintf(name, sizeof(name), "sole_%04d.pgm", i);
      write_file_atomic(fs::path(gen_out) / name,
                        encode_pgm(synth_print(gen_seed + std::uint64_t(i))));
    }
    std::cout << "gen-corpus: wrote " << gen_count << " prints to " << gen_out
              << "\n";
  });

  // ---- pipeline ----
  auto* pipe_cmd = app.add_subcommand(
      "pipeline", "convert -> enhance -> [restore] -> segment -> index add");
  std::string pipe_in, pipe_db, pipe_id, pipe_brand, pipe_created_at;
  bool pipe_restore = false;
  RestoreFlags pipe_restore_flags;
  pipe_cmd->add_option("input", pipe_in, "input image")->required();
  pipe_cmd->add_option("--db", pipe_db, "catalog file")->required();
  pipe_cmd->add_option("--id", pipe_id, "record id")->required()->check(kTokenValidator);
  pipe_cmd->add_option("--brand", pipe_brand, "brand text")->check(kBrandValidator);
  pipe_cmd->add_option("--created-at", pipe_created_at,
                       "override record timestamp (UTC)")
      ->check(kTimestampValidator);
  pipe_restore_flags.attach(pipe_cmd, true, &pipe_restore);
  pipe_cmd->callback([&] {
    Catalog cat = load_catalog_if_present(pipe_db);
    if (cat.contains(pipe_id)) {
      throw Error(Errc::duplicate_id, "id '" + pipe_id + "' is already catalogued");
    }
    const std::string bytes = read_file(pipe_in);
    const GrayImage gray = decode_any_to_gray(bytes);
    std::cout << "convert: " << gray.width() << "x" << gray.height()
              << " levels=" << gray.levels() << "\n";

    GrayImage processed = equalize(gray);
    int max_v = 0;
    for (int v : processed.pixels()) max_v = std::max(max_v, v);
    std::cout << "enhance: equalized, max=" << max_v << "\n";

    std::optional<RestorationSpec> spec;
    if (pipe_restore) {
      spec = pipe_restore_flags.to_spec();
      processed = restore(processed, spec->psf, spec->params);
      std::cout << "restore: method=" << pipe_restore_flags.method
                << " blur-len=" << pipe_restore_flags.blur_len
                << " blur-angle=" << format_double(pipe_restore_flags.blur_angle)
                << (pipe_restore_flags.method == "cls"
                        ? " gamma=" + format_double(pipe_restore_flags.gamma)
                        : " k=" + format_double(pipe_restore_flags.k))
                << "\n";
    } else {
      std::cout << "restore: skipped\n";
    }

    std::cout << "segment: " << segment_summary(global_threshold_index(processed))
              << "\n";

    const std::string created =
        pipe_created_at.empty() ? utc_timestamp_now() : pipe_created_at;
    const IndexRecord rec = ingest(bytes, pipe_id, pipe_brand, spec, created);
    cat = add_record(std::move(cat), rec);
    write_file_atomic(pipe_db, save_catalog(cat));
    std::cout << "index: " << format_record(rec) << "\n";
  });

  try {
    app.parse(argc, argv);
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const soleidx::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
