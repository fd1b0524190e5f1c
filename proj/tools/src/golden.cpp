#include "hausdim/cli/golden.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hausdim::cli {

const std::vector<GoldenRow>& golden_rows() {
  // Reference brackets. t1: continued-fraction sets, t3: perturbed
  // middle-thirds maps, t4: complex continued fractions (five decimals).
  // Tolerances are per endpoint.
  static const std::vector<GoldenRow> rows{
      {"t1", "E[1,2]", Command::kCantor, {1,2}, 0.0, "", 0.0001, 0.0, 0.531280505099895, 0.531280506539767, 2e-9},
      {"t1", "E[1,2]", Command::kCantor, {1,2}, 0.0, "", 5e-05, 0.0, 0.531280505981423, 0.531280506343388, 1e-9},
      {"t1", "E[1,3]", Command::kCantor, {1,3}, 0.0, "", 0.0001, 0.0, 0.454489076859422, 0.454489077843624, 2e-9},
      {"t1", "E[1,3]", Command::kCantor, {1,3}, 0.0, "", 5e-05, 0.0, 0.454489077459035, 0.454489077707546, 1e-9},
      {"t1", "E[1,4]", Command::kCantor, {1,4}, 0.0, "", 0.0001, 0.0, 0.411182724095752, 0.411182724934834, 2e-9},
      {"t1", "E[1,4]", Command::kCantor, {1,4}, 0.0, "", 5e-05, 0.0, 0.411182724603313, 0.411182724815117, 1e-9},
      {"t1", "E[2,3]", Command::kCantor, {2,3}, 0.0, "", 0.0001, 0.0, 0.337436780744847, 0.337436780851139, 2e-9},
      {"t1", "E[2,3]", Command::kCantor, {2,3}, 0.0, "", 5e-05, 0.0, 0.337436780790228, 0.337436780817793, 1e-9},
      {"t1", "E[2,4]", Command::kCantor, {2,4}, 0.0, "", 0.0001, 0.0, 0.306312767993699, 0.306312768092506, 2e-9},
      {"t1", "E[2,4]", Command::kCantor, {2,4}, 0.0, "", 5e-05, 0.0, 0.306312768039239, 0.306312768061760, 1e-9},
      {"t1", "E[3,4]", Command::kCantor, {3,4}, 0.0, "", 0.0001, 0.0, 0.263737482885901, 0.263737482913807, 2e-9},
      {"t1", "E[3,4]", Command::kCantor, {3,4}, 0.0, "", 5e-05, 0.0, 0.263737482894486, 0.263737482901574, 1e-9},
      {"t1", "E[10,11]", Command::kCantor, {10,11}, 0.0, "", 0.0002, 0.0, 0.146921235390446, 0.146921235393309, 2e-9},
      {"t1", "E[10,11]", Command::kCantor, {10,11}, 0.0, "", 5e-05, 0.0, 0.146921235390764, 0.146921235390925, 1e-9},
      {"t1", "E[100,10000]", Command::kCantor, {100,10000}, 0.0, "", 0.0004, 0.0, 0.052246592638657, 0.052246592638662, 2e-9},
      {"t1", "E[100,10000]", Command::kCantor, {100,10000}, 0.0, "", 0.0001, 0.0, 0.052246592638659, 0.052246592638659, 2e-9},
      {"t1", "E[2,4,6,8,10]", Command::kCantor, {2,4,6,8,10}, 0.0, "", 0.0001, 0.0, 0.517357030830725, 0.517357030987649, 2e-9},
      {"t1", "E[2,4,6,8,10]", Command::kCantor, {2,4,6,8,10}, 0.0, "", 5e-05, 0.0, 0.517357030911231, 0.517357030949266, 1e-9},
      {"t1", "E[1,...,10]", Command::kCantor, {1,2,3,4,5,6,7,8,9,10}, 0.0, "", 0.0001, 0.0, 0.925737589218857, 0.925737591547918, 2e-9},
      {"t1", "E[1,...,10]", Command::kCantor, {1,2,3,4,5,6,7,8,9,10}, 0.0, "", 5e-05, 0.0, 0.925737590664670, 0.925737591246997, 1e-9},
      {"t1", "E[1,3,...,33]", Command::kCantor, {1,3,5,7,9,11,13,15,17,19,21,23,25,27,29,31,33}, 0.0, "", 0.0001, 0.0, 0.770516007582087, 0.770516008987138, 2e-9},
      {"t1", "E[1,3,...,33]", Command::kCantor, {1,3,5,7,9,11,13,15,17,19,21,23,25,27,29,31,33}, 0.0, "", 5e-05, 0.0, 0.770516008433225, 0.770516008784885, 1e-9},
      {"t1", "E[2,4,...,34]", Command::kCantor, {2,4,6,8,10,12,14,16,18,20,22,24,26,28,30,32,34}, 0.0, "", 0.0001, 0.0, 0.633471970121772, 0.633471970288076, 2e-9},
      {"t1", "E[2,4,...,34]", Command::kCantor, {2,4,6,8,10,12,14,16,18,20,22,24,26,28,30,32,34}, 0.0, "", 5e-05, 0.0, 0.633471970211609, 0.633471970252711, 1e-9},
      {"t1", "E[1,...,34]", Command::kCantor, {1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,32,33,34}, 0.0, "", 0.0001, 0.0, 0.980419623378987, 0.980419625624112, 2e-9},
      {"t1", "E[1,...,34]", Command::kCantor, {1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25,26,27,28,29,30,31,32,33,34}, 0.0, "", 5e-05, 0.0, 0.980419624765058, 0.980419625326256, 1e-9},
      {"t3", "lambda=0.0", Command::kPerturbed, {}, 0.0, "", 1e-4, 0.0, 0.630929753571458, 0.630929753571458, 1e-8},
      {"t3", "lambda=0.25", Command::kPerturbed, {}, 0.25, "", 1e-4, 0.0, 0.691029102085966, 0.691029110502743, 1e-8},
      {"t3", "lambda=0.5", Command::kPerturbed, {}, 0.5, "", 1e-4, 0.0, 0.733474587362570, 0.733474622222681, 1e-8},
      {"t3", "lambda=0.75", Command::kPerturbed, {}, 0.75, "", 1e-4, 0.0, 0.767207161950980, 0.767207292955634, 1e-8},
      {"t3", "lambda=1.0", Command::kPerturbed, {}, 1.0, "", 1e-4, 0.0, 0.796727161816835, 0.796727861914653, 1e-8},
      {"t4", "I1 R=100", Command::kComplex, {}, 0.0, "I1", 0.02, 100.0, 1.85459, 1.85609, 1e-3},
      {"t4", "I1 R=100", Command::kComplex, {}, 0.0, "I1", 0.01, 100.0, 1.85507, 1.85595, 1e-3},
      {"t4", "I1 R=100", Command::kComplex, {}, 0.0, "I1", 0.005, 100.0, 1.85518, 1.85591, 1e-3},
      {"t4", "I1 R=200", Command::kComplex, {}, 0.0, "I1", 0.02, 200.0, 1.85503, 1.85604, 1e-3},
      {"t4", "I1 R=200", Command::kComplex, {}, 0.0, "I1", 0.01, 200.0, 1.85550, 1.85589, 1e-3},
      {"t4", "I1 R=300", Command::kComplex, {}, 0.0, "I1", 0.02, 300.0, 1.85513, 1.85603, 1e-3},
      {"t4", "I2 R=100", Command::kComplex, {}, 0.0, "I2", 0.02, 100.0, 1.60240, 1.60677, 1e-3},
      {"t4", "I2 R=100", Command::kComplex, {}, 0.0, "I2", 0.01, 100.0, 1.60270, 1.60668, 1e-3},
      {"t4", "I2 R=100", Command::kComplex, {}, 0.0, "I2", 0.005, 100.0, 1.60277, 1.60666, 1e-3},
      {"t4", "I2 R=200", Command::kComplex, {}, 0.0, "I2", 0.02, 200.0, 1.60444, 1.60654, 1e-3},
      {"t4", "I2 R=200", Command::kComplex, {}, 0.0, "I2", 0.01, 200.0, 1.60474, 1.60644, 1e-3},
      {"t4", "I2 R=300", Command::kComplex, {}, 0.0, "I2", 0.02, 300.0, 1.60504, 1.60650, 1e-3},
      {"t4", "I3", Command::kComplex, {}, 0.0, "I3", 0.02, 0.0, 1.53705, 1.53790, 1e-4},
      {"t4", "I3", Command::kComplex, {}, 0.0, "I3", 0.01, 0.0, 1.53754, 1.53774, 1e-4},
      {"t4", "I3", Command::kComplex, {}, 0.0, "I3", 0.005, 0.0, 1.53765, 1.53770, 1e-4},
  };
  return rows;
}

std::vector<GoldenRow> select_rows(std::string_view table, std::string_view filter) {
  std::vector<GoldenRow> out;
  for (const GoldenRow& row : golden_rows()) {
    if (row.table != table) continue;
    if (!filter.empty() && row.label.find(filter) == std::string::npos) continue;
    out.push_back(row);
  }
  return out;
}

double estimated_seconds(const GoldenRow& row) {
  if (row.command != Command::kComplex) {
    // about 2e-6 s per node and map over a whole solve
    return 2e-6 * static_cast<double>(std::max<std::size_t>(row.digits.size(), 2)) / row.h;
  }
  const double pi = std::numbers::pi;
  const bool folded = row.set != "I2";
  const double nodes = (folded ? pi / 8.0 : pi / 4.0) / (row.h * row.h);
  double digits = 10.0;
  if (row.set == "I1") digits = pi * row.radius * row.radius / 2.0;
  if (row.set == "I2") digits = pi * row.radius * row.radius / 4.0;
  // measured: roughly 1.6e-6 s per (node, digit) pair for a full solve
  return 1.6e-6 * nodes * digits;
}

RunConfig config_for(const GoldenRow& row, const RunConfig& base) {
  RunConfig c = base;
  c.command = row.command;
  c.digits = row.digits;
  c.lambda = row.lambda;
  c.set = row.set;
  c.h = row.h;
  if (row.radius > 0.0) c.radius = row.radius;
  c.depth.reset();
  return c;
}

}  // namespace hausdim::cli
