// Copyright 2026 The BDC Authors. All Rights Reserved.
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

#pragma once

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>
#include <utility>
#include <vector>

#include "bdc/bdc.hpp"

namespace bdc::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kIo = 2,
  kCorrupt = 3,
};

enum class ReportFormat { table, kv };

struct CliConfig {
  std::string command;
  std::string input;
  std::string output;
  int quality = 50;
  std::optional<std::pair<int, int>> sweep;
  ReportFormat format = ReportFormat::table;
};

/// Sweep rows are taken every kSweepStep quality levels starting at a.
inline constexpr int kSweepStep = 10;

inline std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io, "cannot open '" + path + "' for reading");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(Errc::io, "error reading '" + path + "'");
  return bytes;
}

/// Writes to a sibling temporary file and renames it into place, so the
/// destination either keeps its old content or gets the complete new one.
inline void write_file_atomic(const std::string& path,
                              const std::vector<std::uint8_t>& bytes) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::io, "cannot open '" + tmp.string() + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw Error(Errc::io, "error writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw Error(Errc::io, "cannot move output into '" + path + "': " + ec.message());
  }
}

inline int exit_code_for(Errc code) {
  switch (code) {
    case Errc::io: return kIo;
    case Errc::invalid_quality: return kUsage;
    default: return kCorrupt;
  }
}

inline std::string format_number(double v, int precision) {
  if (std::isinf(v)) return "inf";
  std::ostringstream s;
  s << std::fixed << std::setprecision(precision) << v;
  return s.str();
}

inline std::string dimension(const Image& image) {
  return std::to_string(image.width()) + "*" + std::to_string(image.height());
}

struct ReportRow {
  int quality = 0;
  CompressionReport report;
};

inline void print_reports(std::ostream& out, const std::string& name,
                          const Image& image, const std::vector<ReportRow>& rows,
                          ReportFormat format) {
  if (format == ReportFormat::kv) {
    for (const ReportRow& row : rows) {
      const CompressionReport& r = row.report;
      out << "image=" << name << " width=" << image.width()
          << " height=" << image.height() << " channels=" << image.channels()
          << " quality=" << row.quality << " original_bytes=" << r.original_bytes
          << " compressed_bytes=" << r.compressed_bytes
          << " cr=" << format_number(r.cr, 6) << " rd=" << format_number(r.rd, 6)
          << " reduction_percent=" << format_number(r.reduction_percent(), 4)
          << " mse=" << format_number(r.mse, 6)
          << " psnr=" << format_number(r.psnr, 4) << "\n";
    }
    return;
  }

  const std::vector<std::string> header = {
      "Image",  "Dimension",           "Quality",
      "Original Size (KB)",            "Compressed Size (KB)",
      "Reduction (Percent)",           "CR",
      "MSE",    "PSNR (dB)"};
  std::vector<std::vector<std::string>> cells;
  for (const ReportRow& row : rows) {
    const CompressionReport& r = row.report;
    cells.push_back({name, dimension(image), std::to_string(row.quality),
                     format_number(static_cast<double>(r.original_bytes) / 1024.0, 1),
                     format_number(static_cast<double>(r.compressed_bytes) / 1024.0, 1),
                     format_number(r.reduction_percent(), 2) + "%",
                     format_number(r.cr, 2), format_number(r.mse, 3),
                     format_number(r.psnr, 2)});
  }
  std::vector<std::size_t> widths(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) {
    widths[i] = header[i].size();
    for (const auto& line : cells) widths[i] = std::max(widths[i], line[i].size());
  }
  const auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      out << (i == 0 ? "" : " | ") << std::setw(static_cast<int>(widths[i]))
          << (i == 0 ? std::left : std::right) << line[i];
    }
    out << std::right << "\n";
  };
  emit(header);
  std::size_t total = 0;
  for (std::size_t w : widths) total += w;
  out << std::string(total + 3 * (widths.size() - 1), '-') << "\n";
  for (const auto& line : cells) emit(line);
}

inline std::string stem(const std::string& path) {
  return std::filesystem::path(path).filename().string();
}

inline int cmd_encode(const CliConfig& cfg, std::ostream& out) {
  const Image image = read_image(read_file(cfg.input));
  const CompressedImage compressed = encode(image, cfg.quality);
  const std::vector<std::uint8_t> bytes = serialize(compressed);
  write_file_atomic(cfg.output, bytes);
  const Image reconstructed = decode(compressed);
  const CompressionReport report = CompressionReport::make(
      raw_payload_size(image), bytes.size(), mse_psnr(image, reconstructed));
  print_reports(out, stem(cfg.input), image, {{cfg.quality, report}}, cfg.format);
  return kOk;
}

inline int cmd_decode(const CliConfig& cfg, std::ostream& out) {
  const CompressedImage compressed = deserialize(read_file(cfg.input));
  const Image image = decode(compressed);
  write_file_atomic(cfg.output, write_image(image));
  if (cfg.format == ReportFormat::kv) {
    out << "width=" << image.width() << " height=" << image.height()
        << " channels=" << image.channels() << "\n";
  } else {
    out << "decoded " << dimension(image) << " x" << image.channels()
        << " -> " << cfg.output << "\n";
  }
  return kOk;
}

inline int cmd_roundtrip(const CliConfig& cfg, std::ostream& out) {
  const Image image = read_image(read_file(cfg.input));
  std::vector<ReportRow> rows;
  if (cfg.sweep) {
    for (int q = cfg.sweep->first; q <= cfg.sweep->second; q += kSweepStep) {
      rows.push_back({q, roundtrip_report(image, q)});
    }
  } else {
    rows.push_back({cfg.quality, roundtrip_report(image, cfg.quality)});
  }
  print_reports(out, stem(cfg.input), image, rows, cfg.format);
  return kOk;
}

inline int cmd_inspect(const CliConfig& cfg, std::ostream& out) {
  const std::vector<std::uint8_t> bytes = read_file(cfg.input);
  const CompressedImage c = deserialize(bytes);

  std::map<std::size_t, std::size_t> histogram;  // symbol count -> blocks
  std::size_t blocks = 0;
  std::size_t nonzero_total = 0;
  std::size_t nonzero_max = 0;
  std::size_t zero_blocks = 0;
  for (const auto& channel : c.streams) {
    for (const BlockStream& s : channel) {
      ++blocks;
      ++histogram[s.size()];
      std::size_t nonzero = 0;
      for (std::int16_t v : rle_decode(s)) nonzero += v != 0;
      nonzero_total += nonzero;
      nonzero_max = std::max(nonzero_max, nonzero);
      zero_blocks += nonzero == 0;
    }
  }
  const double nonzero_mean =
      blocks == 0 ? 0.0 : static_cast<double>(nonzero_total) / static_cast<double>(blocks);

  if (cfg.format == ReportFormat::kv) {
    out << "magic=BDC1\nversion=" << int{kFormatVersion} << "\nwidth=" << c.width
        << "\nheight=" << c.height << "\nchannels=" << int{c.channels}
        << "\nquality=" << int{c.quality} << "\nfile_bytes=" << bytes.size()
        << "\nblocks=" << blocks << "\nnonzero_total=" << nonzero_total
        << "\nnonzero_mean=" << format_number(nonzero_mean, 4)
        << "\nnonzero_max=" << nonzero_max << "\nzero_blocks=" << zero_blocks << "\n";
    for (const auto& [symbols, count] : histogram) {
      out << "symbols_" << symbols << "=" << count << "\n";
    }
    return kOk;
  }

  out << "format     BDC1 v" << int{kFormatVersion} << "\n"
      << "dimension  " << c.width << "*" << c.height << "\n"
      << "channels   " << int{c.channels} << "\n"
      << "quality    " << int{c.quality} << "\n"
      << "file size  " << bytes.size() << " bytes\n"
      << "blocks     " << blocks << "\n"
      << "nonzero coefficients: total " << nonzero_total << ", mean "
      << format_number(nonzero_mean, 2) << " per block, max " << nonzero_max
      << ", all-zero blocks " << zero_blocks << "\n"
      << "symbols per block histogram:\n";
  for (const auto& [symbols, count] : histogram) {
    out << "  " << std::setw(4) << symbols << "  " << count << "\n";
  }
  return kOk;
}

inline std::pair<int, int> parse_sweep(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    throw CLI::ValidationError("--sweep", "expected <a>..<b>, got '" + text + "'");
  }
  int a = 0;
  int b = 0;
  try {
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const std::string lhs = text.substr(0, dots);
    const std::string rhs = text.substr(dots + 2);
    a = std::stoi(lhs, &used_a);
    b = std::stoi(rhs, &used_b);
    if (used_a != lhs.size() || used_b != rhs.size()) throw std::invalid_argument(text);
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("--sweep", "expected <a>..<b>, got '" + text + "'");
  }
  if (!valid_quality(a) || !valid_quality(b) || a > b) {
    throw CLI::ValidationError("--sweep", "range must satisfy 1 <= a <= b <= 100");
  }
  return {a, b};
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Block DCT image codec (BDC1)", "bdc"};
  app.require_subcommand(1);
  CliConfig cfg;
  std::string sweep_text;

  const std::map<std::string, ReportFormat> formats = {
      {"table", ReportFormat::table}, {"kv", ReportFormat::kv}};
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "report format: table or kv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  const auto add_quality = [&](CLI::App* sub) {
    sub->add_option("--quality", cfg.quality, "quality level 1-100 (default 50)")
        ->check(CLI::Range(kMinQuality, kMaxQuality));
  };

  CLI::App* enc = app.add_subcommand("encode", "compress a PGM/PPM image to BDC1");
  enc->add_option("input", cfg.input, "input .pgm/.ppm")->required();
  enc->add_option("output", cfg.output, "output .bdc")->required();
  add_quality(enc);
  add_format(enc);

  CLI::App* dec = app.add_subcommand("decode", "reconstruct a PGM/PPM image from BDC1");
  dec->add_option("input", cfg.input, "input .bdc")->required();
  dec->add_option("output", cfg.output, "output .pgm/.ppm")->required();
  add_format(dec);

  CLI::App* rt = app.add_subcommand("roundtrip", "in-memory encode+decode report");
  rt->add_option("input", cfg.input, "input .pgm/.ppm")->required();
  add_quality(rt);
  rt->add_option("--sweep", sweep_text, "quality range <a>..<b>, every 10 levels");
  add_format(rt);

  CLI::App* ins = app.add_subcommand("inspect", "dump BDC1 header and block statistics");
  ins->add_option("input", cfg.input, "input .bdc")->required();
  add_format(ins);

  try {
    app.parse(argc, argv);
    if (!sweep_text.empty()) cfg.sweep = parse_sweep(sweep_text);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (enc->parsed()) return cmd_encode(cfg, out);
    if (dec->parsed()) return cmd_decode(cfg, out);
    if (rt->parsed()) return cmd_roundtrip(cfg, out);
    return cmd_inspect(cfg, out);
  } catch (const Error& e) {
    err << "bdc: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::bad_alloc&) {
    err << "bdc: out of memory\n";
    return kCorrupt;
  }
}

}  // namespace bdc::cli
