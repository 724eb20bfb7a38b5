/*
 * Copyright 2026 The gaussnet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gaussnet {

struct ChartSeries {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> error;  ///< optional symmetric error bars, same length as y
};

struct LineChart {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<ChartSeries> series;
    /// Fixed y range; when lo >= hi the range is taken from the data.
    double y_min = 0.0;
    double y_max = 0.0;
    int width = 640;
    int height = 420;
};

/// Polylines with axis ticks and a legend as a standalone SVG document.
void write_svg(std::ostream& out, const LineChart& chart);

/// Tick positions covering [lo, hi] with a 1/2/5 step.
std::vector<double> nice_ticks(double lo, double hi, int target = 6);

}  // namespace gaussnet
