#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pquad/search.hpp"

namespace pquad {

/// Shortest decimal form that parses back to exactly the same double, so that
/// CSV and JSON reports diff cleanly across runs and survive round trips.
std::string format_double(double x);

/// Fixed record schema shared by every tabular emitter:
///   function,a,b,alpha,lambda,q,p,case,i_f_abs,bound22,bound23,ratio22,ratio23,pass
const std::string& csv_header();

std::string to_csv_row(const TrialRecord& rec);
std::string to_csv(const std::vector<TrialRecord>& records);

/// JSON array, one object per record, keys matching the CSV columns; absent
/// optional values serialize as null.
std::string to_json(const std::vector<TrialRecord>& records);

}  // namespace pquad
