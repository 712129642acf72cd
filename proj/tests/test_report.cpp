#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "pquad/catalog.hpp"
#include "pquad/report.hpp"
#include "pquad/rng.hpp"
#include "pquad/search.hpp"

using namespace pquad;

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

TEST_CASE("format_double round-trips exactly") {
    SplitMix64 rng(123);
    std::vector<double> values{0.0,    1.0 / 3.0, 5.0 / 18.0, -0.1, 1e-300,
                               1e300, 2.0,       -6.25};
    for (int i = 0; i < 200; ++i)
        values.push_back((rng.uniform01() - 0.5) * std::pow(10.0, rng.uniform(-12, 12)));
    for (double v : values) {
        const std::string s = format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
}

TEST_CASE("CSV header is the fixed schema") {
    CHECK(csv_header() ==
          "function,a,b,alpha,lambda,q,p,case,i_f_abs,bound22,bound23,ratio22,"
          "ratio23,pass");
}

TEST_CASE("CSV rows leave absent optionals empty") {
    TrialRecord rec;
    rec.function = "pow2";
    rec.a = 0.0;
    rec.b = 1.0;
    rec.alpha = 0.5;
    rec.lambda = 0.0;
    rec.q = 1.0;
    rec.i_f_abs = 0.25;
    rec.bound22 = 0.5;
    rec.case_tag = CaseTag::C1;
    rec.ratio22 = 0.5;
    rec.pass = true;
    CHECK(to_csv_row(rec) == "pow2,0,1,0.5,0,1,,C1,0.25,0.5,,0.5,,true");
}

TEST_CASE("CSV and JSON carry identical values") {
    const std::vector<TrialRecord> recs = fuzz_records(catalog(), 50, 99);
    const std::string csv = to_csv(recs);
    const auto json = nlohmann::json::parse(to_json(recs));
    REQUIRE(json.is_array());
    REQUIRE(json.size() == recs.size());

    std::vector<std::string> lines = split(csv, '\n');
    REQUIRE(lines.size() >= recs.size() + 1);  // header + rows (+ trailing empty)
    const std::vector<std::string> cols = split(lines[0], ',');

    for (std::size_t i = 0; i < recs.size(); ++i) {
        const std::vector<std::string> cells = split(lines[i + 1], ',');
        REQUIRE(cells.size() == cols.size());
        const auto& obj = json[i];
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const std::string& key = cols[c];
            const std::string& cell = cells[c];
            if (key == "function" || key == "case") {
                CHECK(obj[key].get<std::string>() == cell);
            } else if (key == "pass") {
                CHECK(obj[key].get<bool>() == (cell == "true"));
            } else if (cell.empty()) {
                CHECK(obj[key].is_null());
            } else {
                CHECK(obj[key].get<double>() == std::strtod(cell.c_str(), nullptr));
            }
        }
    }
}
