#include "pquad/report.hpp"

#include <charconv>
#include <cmath>

#include "json.hpp"

namespace pquad {

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

const std::string& csv_header() {
    static const std::string header =
        "function,a,b,alpha,lambda,q,p,case,i_f_abs,bound22,bound23,ratio22,"
        "ratio23,pass";
    return header;
}

namespace {

std::string opt_cell(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

}  // namespace

std::string to_csv_row(const TrialRecord& rec) {
    std::string row;
    row += rec.function;
    row += ',';
    row += format_double(rec.a);
    row += ',';
    row += format_double(rec.b);
    row += ',';
    row += format_double(rec.alpha);
    row += ',';
    row += format_double(rec.lambda);
    row += ',';
    row += format_double(rec.q);
    row += ',';
    row += opt_cell(rec.p);
    row += ',';
    row += case_name(rec.case_tag);
    row += ',';
    row += format_double(rec.i_f_abs);
    row += ',';
    row += format_double(rec.bound22);
    row += ',';
    row += opt_cell(rec.bound23);
    row += ',';
    row += format_double(rec.ratio22);
    row += ',';
    row += opt_cell(rec.ratio23);
    row += ',';
    row += rec.pass ? "true" : "false";
    return row;
}

std::string to_csv(const std::vector<TrialRecord>& records) {
    std::string out = csv_header();
    out += '\n';
    for (const TrialRecord& rec : records) {
        out += to_csv_row(rec);
        out += '\n';
    }
    return out;
}

std::string to_json(const std::vector<TrialRecord>& records) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const TrialRecord& rec : records) {
        nlohmann::ordered_json obj;
        obj["function"] = rec.function;
        obj["a"] = rec.a;
        obj["b"] = rec.b;
        obj["alpha"] = rec.alpha;
        obj["lambda"] = rec.lambda;
        obj["q"] = rec.q;
        if (rec.p)
            obj["p"] = *rec.p;
        else
            obj["p"] = nullptr;
        obj["case"] = case_name(rec.case_tag);
        obj["i_f_abs"] = rec.i_f_abs;
        obj["bound22"] = rec.bound22;
        if (rec.bound23)
            obj["bound23"] = *rec.bound23;
        else
            obj["bound23"] = nullptr;
        obj["ratio22"] = rec.ratio22;
        if (rec.ratio23)
            obj["ratio23"] = *rec.ratio23;
        else
            obj["ratio23"] = nullptr;
        obj["pass"] = rec.pass;
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

}  // namespace pquad
