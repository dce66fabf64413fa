//
// Copyright 2026 The LadderLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include <algorithm>
#include <cmath>
#include <fstream>
#include <system_error>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "ladderlab/harness.h"

namespace ladderlab {
namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 440;
constexpr double kLeft = 70;
constexpr double kRight = 180;
constexpr double kTop = 40;
constexpr double kBottom = 55;

std::string Escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

absl::Status WriteText(const std::filesystem::path& path,
                       const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot write ", path.string()));
  }
  file << text;
  file.close();
  if (!file) {
    return absl::PermissionDeniedError(
        absl::StrCat("failed writing ", path.string()));
  }
  return absl::OkStatus();
}

ExperimentSpec Fig1Spec(MechanismKind mechanism, AttackKind attack,
                        int64_t rounds, int64_t accounts, uint64_t seed) {
  ExperimentSpec spec;
  spec.mechanism = mechanism;
  spec.precision = *Precision::FromDenominator(100);
  spec.attack = attack;
  spec.n = 1000;
  spec.rounds = rounds;
  spec.accounts = accounts;
  spec.base_seed = seed;
  return spec;
}

constexpr int64_t kFig2Trajectories = 5;

}  // namespace

std::string RenderSvgPlot(std::string_view title, std::string_view x_label,
                          std::string_view y_label,
                          const std::vector<PlotSeries>& series) {
  double x_max = 1.0;
  double y_min = 1.0;
  double y_max = 0.0;
  for (const PlotSeries& s : series) {
    for (const auto& [x, y] : s.points) {
      x_max = std::max(x_max, x);
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  }
  if (y_min > y_max) {
    y_min = 0.0;
    y_max = 1.0;
  }
  y_min = std::max(0.0, std::floor(y_min * 20.0 - 1.0) / 20.0);
  y_max = std::min(1.0, std::ceil(y_max * 20.0 + 1.0) / 20.0);
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + plot_w * x / x_max; };
  auto py = [&](double y) {
    return kTop + plot_h * (1.0 - (y - y_min) / (y_max - y_min));
  };

  std::string svg = absl::StrFormat(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%g\" height=\"%g\" "
      "viewBox=\"0 0 %g %g\" font-family=\"sans-serif\" font-size=\"12\">\n"
      "<rect width=\"100%%\" height=\"100%%\" fill=\"white\"/>\n"
      "<text x=\"%g\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">%s"
      "</text>\n",
      kWidth, kHeight, kWidth, kHeight, kLeft + plot_w / 2, Escape(title));
  absl::StrAppendFormat(
      &svg,
      "<rect x=\"%g\" y=\"%g\" width=\"%g\" height=\"%g\" fill=\"none\" "
      "stroke=\"black\"/>\n",
      kLeft, kTop, plot_w, plot_h);
  for (int i = 0; i <= 5; ++i) {
    const double xv = x_max * i / 5.0;
    const double yv = y_min + (y_max - y_min) * i / 5.0;
    absl::StrAppendFormat(
        &svg,
        "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
        "stroke=\"black\"/>\n<text x=\"%.2f\" y=\"%.2f\" "
        "text-anchor=\"middle\">%g</text>\n",
        px(xv), kTop + plot_h, px(xv), kTop + plot_h + 5, px(xv),
        kTop + plot_h + 19, std::round(xv));
    absl::StrAppendFormat(
        &svg,
        "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
        "stroke=\"black\"/>\n<text x=\"%.2f\" y=\"%.2f\" "
        "text-anchor=\"end\">%.3f</text>\n",
        kLeft - 5, py(yv), kLeft, py(yv), kLeft - 8, py(yv) + 4, yv);
  }
  absl::StrAppendFormat(&svg,
                        "<text x=\"%g\" y=\"%g\" text-anchor=\"middle\">%s"
                        "</text>\n",
                        kLeft + plot_w / 2, kHeight - 12, Escape(x_label));
  absl::StrAppendFormat(&svg,
                        "<text transform=\"translate(18,%g) rotate(-90)\" "
                        "text-anchor=\"middle\">%s</text>\n",
                        kTop + plot_h / 2, Escape(y_label));

  for (size_t s = 0; s < series.size(); ++s) {
    const PlotSeries& line = series[s];
    absl::StrAppendFormat(&svg,
                          "<polyline fill=\"none\" stroke=\"%s\" "
                          "stroke-width=\"1.5\" points=\"",
                          line.color);
    for (const auto& [x, y] : line.points) {
      absl::StrAppendFormat(&svg, "%.2f,%.2f ", px(x), py(y));
    }
    svg += "\"/>\n";
    const double ly = kTop + 14 + 18 * static_cast<double>(s);
    absl::StrAppendFormat(
        &svg,
        "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"%s\" "
        "stroke-width=\"2\"/>\n<text x=\"%g\" y=\"%g\">%s</text>\n",
        kLeft + plot_w + 10, ly, kLeft + plot_w + 30, ly, line.color,
        kLeft + plot_w + 35, ly + 4, Escape(line.label));
  }
  svg += "</svg>\n";
  return svg;
}

absl::StatusOr<Figure> ParseFigure(std::string_view name) {
  if (name == "fig1") return Figure::kAttacks;
  if (name == "fig2") return Figure::kLadderEnumeration;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown figure '", std::string(name), "'"));
}

absl::StatusOr<std::vector<FigureCurve>> FigureCurves(Figure figure,
                                                      uint64_t seed) {
  std::vector<std::pair<std::string, ExperimentSpec>> plan;
  if (figure == Figure::kAttacks) {
    plan.emplace_back("fig1_boost_full",
                      Fig1Spec(MechanismKind::kFullInformation,
                               AttackKind::kBoosting, 1000, 1, seed));
    plan.emplace_back(
        "fig1_boost_ladder",
        Fig1Spec(MechanismKind::kSimplifiedLadder,
                 AttackKind::kMultiAccountBoosting, 1000, 1, seed));
    plan.emplace_back("fig1_swap_pf_ladder",
                      Fig1Spec(MechanismKind::kParameterFreeLadder,
                               AttackKind::kSwap, 999, 1, seed));
    plan.emplace_back(
        "fig1_multi_boost_ladder",
        Fig1Spec(MechanismKind::kSimplifiedLadder,
                 AttackKind::kMultiAccountBoosting, 999, 1000, seed));
  } else {
    for (const auto& [n, d, tag] :
         {std::tuple<int64_t, int64_t, const char*>{1000, 100, "n1000_eta0.01"},
          {20000, 1000, "n20000_eta0.001"}}) {
      for (int64_t i = 0; i < kFig2Trajectories; ++i) {
        ExperimentSpec spec;
        spec.mechanism = MechanismKind::kSimplifiedLadder;
        spec.precision = *Precision::FromDenominator(d);
        spec.attack = AttackKind::kEnumeration;
        spec.n = n;
        spec.rounds = n;
        spec.accounts = 2;
        spec.base_seed = seed + static_cast<uint64_t>(i);
        plan.emplace_back(absl::StrCat("fig2_", tag, "_trial", i), spec);
      }
    }
  }
  std::vector<FigureCurve> curves;
  for (auto& [name, spec] : plan) {
    absl::StatusOr<RunRecord> run = RunTrial(spec, 0);
    if (!run.ok()) return run.status();
    curves.push_back({name, *std::move(run)});
  }
  return curves;
}

absl::StatusOr<FigureOutput> ReproduceFigure(
    Figure figure, const std::filesystem::path& outdir, uint64_t seed) {
  std::error_code ec;
  std::filesystem::create_directories(outdir, ec);
  if (ec || !std::filesystem::is_directory(outdir)) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot create output directory ", outdir.string()));
  }
  const std::filesystem::path probe = outdir / ".ladderlab_write_probe";
  if (absl::Status s = WriteText(probe, ""); !s.ok()) {
    return absl::PermissionDeniedError(
        absl::StrCat("output directory ", outdir.string(), " is not writable"));
  }
  std::filesystem::remove(probe, ec);

  absl::StatusOr<std::vector<FigureCurve>> curves = FigureCurves(figure, seed);
  if (!curves.ok()) return curves.status();
  FigureOutput out;
  out.curves = *std::move(curves);
  for (const FigureCurve& curve : out.curves) {
    const std::filesystem::path path = outdir / (curve.name + ".csv");
    if (absl::Status s = WriteTrajectoryCsv(curve.run.trajectory, path);
        !s.ok()) {
      return s;
    }
    out.files.push_back(path);
  }

  static constexpr const char* kColors[] = {"#1f77b4", "#2ca02c", "#d62728",
                                            "#9467bd", "#ff7f0e"};
  auto series_of = [&](size_t i, std::string label) {
    return PlotSeries{std::move(label), kColors[i % 5],
                      HeadlineSeries(out.curves[i].run.trajectory)};
  };
  std::vector<std::pair<std::string, std::string>> panels;
  if (figure == Figure::kAttacks) {
    std::vector<PlotSeries> series = {
        series_of(0, "boosting, full information"),
        series_of(1, "boosting, Ladder (1 account)"),
        series_of(2, "swap, parameter-free Ladder"),
        series_of(3, "boosting, Ladder (1000 accounts)")};
    panels.emplace_back(
        "fig1.svg", RenderSvgPlot("Attacks on leaderboards (n = 1000)",
                                  "submissions", "displayed score", series));
  } else {
    for (size_t panel = 0; panel < 2; ++panel) {
      std::vector<PlotSeries> series;
      for (size_t i = 0; i < kFig2Trajectories; ++i) {
        series.push_back(series_of(panel * kFig2Trajectories + i,
                                   absl::StrCat("attack ", i + 1)));
      }
      panels.emplace_back(
          panel == 0 ? "fig2_left.svg" : "fig2_right.svg",
          RenderSvgPlot(panel == 0 ? "Enumeration on Ladder, n = 1000, "
                                     "eta = 0.01"
                                   : "Enumeration on Ladder, n = 20000, "
                                     "eta = 0.001",
                        "submissions", "displayed score", series));
    }
  }
  for (const auto& [file, svg] : panels) {
    const std::filesystem::path path = outdir / file;
    if (absl::Status s = WriteText(path, svg); !s.ok()) return s;
    out.files.push_back(path);
  }
  return out;
}

}  // namespace ladderlab
