// Copyright 2026 The scrub Authors
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

#include "scrub/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "scrub/errors.hpp"

namespace scrub {

void write_svg_plot(const std::string& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<SvgSeries>& series) {
    std::ofstream out(path);
    if (!out) throw ParseError("svg: cannot write " + path);

    double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
    bool first = true;
    for (const SvgSeries& s : series) {
        for (const auto& [x, y] : s.points) {
            if (first) {
                x_min = x_max = x;
                y_min = y_max = y;
                first = false;
            }
            x_min = std::min(x_min, x);
            x_max = std::max(x_max, x);
            y_min = std::min(y_min, y);
            y_max = std::max(y_max, y);
        }
    }
    if (x_max - x_min < 1e-12) x_max = x_min + 1.0;
    if (y_max - y_min < 1e-12) y_max = y_min + 1.0;

    const double w = 640.0, h = 440.0;
    const double ml = 70.0, mr = 20.0, mt = 40.0, mb = 50.0;
    auto px = [&](double x) {
        return ml + (x - x_min) / (x_max - x_min) * (w - ml - mr);
    };
    auto py = [&](double y) {
        return h - mb - (y - y_min) / (y_max - y_min) * (h - mt - mb);
    };

    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                   "#9467bd", "#ff7f0e", "#8c564b"};

    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w
        << "' height='" << h << "' viewBox='0 0 " << w << " " << h << "'>\n";
    out << "<rect width='100%' height='100%' fill='white'/>\n";
    out << "<text x='" << w / 2 << "' y='24' text-anchor='middle' "
        << "font-family='sans-serif' font-size='15'>" << title << "</text>\n";

    // Axes with min/max tick labels.
    out << "<line x1='" << ml << "' y1='" << h - mb << "' x2='" << w - mr
        << "' y2='" << h - mb << "' stroke='black'/>\n";
    out << "<line x1='" << ml << "' y1='" << mt << "' x2='" << ml << "' y2='"
        << h - mb << "' stroke='black'/>\n";
    out << "<text x='" << (ml + w - mr) / 2 << "' y='" << h - 12
        << "' text-anchor='middle' font-family='sans-serif' font-size='12'>"
        << x_label << "</text>\n";
    out << "<text x='16' y='" << (mt + h - mb) / 2
        << "' font-family='sans-serif' font-size='12' transform='rotate(-90 16 "
        << (mt + h - mb) / 2 << ")' text-anchor='middle'>" << y_label
        << "</text>\n";
    out << "<text x='" << ml << "' y='" << h - mb + 16
        << "' font-family='sans-serif' font-size='10'>" << x_min << "</text>\n";
    out << "<text x='" << w - mr << "' y='" << h - mb + 16
        << "' text-anchor='end' font-family='sans-serif' font-size='10'>"
        << x_max << "</text>\n";
    out << "<text x='" << ml - 4 << "' y='" << h - mb
        << "' text-anchor='end' font-family='sans-serif' font-size='10'>"
        << y_min << "</text>\n";
    out << "<text x='" << ml - 4 << "' y='" << mt + 4
        << "' text-anchor='end' font-family='sans-serif' font-size='10'>"
        << y_max << "</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const SvgSeries& s = series[si];
        if (s.points.empty()) continue;
        const char* color = colors[si % 6];
        out << "<polyline fill='none' stroke='" << color
            << "' stroke-width='1.5' points='";
        for (const auto& [x, y] : s.points) {
            out << px(x) << "," << py(y) << " ";
        }
        out << "'/>\n";
        out << "<text x='" << w - mr - 4 << "' y='" << mt + 14 * (si + 1)
            << "' text-anchor='end' font-family='sans-serif' font-size='11' "
            << "fill='" << color << "'>" << s.label << "</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace scrub
