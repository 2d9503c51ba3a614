// Copyright 2026 The swtest Authors
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

// CSV schemas of the harness outputs and the SVG chart writer.
//
//   power:    sweep_value,method,rejections,reps,p_hat,ci_half
//   type1:    label,L,rejections,reps,p_hat,ci_half
//   timing:   method,n,L,B,d,seconds_median
//   nullhist: bin_lo,bin_hi,count

#ifndef SWTEST_ARTIFACTS_H_
#define SWTEST_ARTIFACTS_H_

#include <string>
#include <vector>

#include "swtest/csv_io.h"
#include "swtest/harness.h"

namespace swtest {

CsvTable PowerCurveToCsv(const PowerCurve& curve);
PowerCurve PowerCurveFromCsv(const CsvTable& table, const std::string& sweep_variable);

CsvTable Type1ToCsv(const std::vector<Type1Row>& rows);
std::vector<Type1Row> Type1FromCsv(const CsvTable& table);

CsvTable TimingToCsv(const std::vector<TimingRecord>& records);
std::vector<TimingRecord> TimingFromCsv(const CsvTable& table);

CsvTable NullHistogramToCsv(const NullHistogram& histogram);

// Line chart, one polyline per method, 95% intervals as vertical whiskers.
std::string PowerCurveSvg(const PowerCurve& curve, const std::string& title);

}  // namespace swtest

#endif  // SWTEST_ARTIFACTS_H_
