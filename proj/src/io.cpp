#include "bp/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "bp/errors.hpp"

namespace bp::io {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::string strip_quotes(const std::string& s) {
    if (s.size() >= 2 && ((s.front() == '\'' && s.back() == '\'') ||
                          (s.front() == '"' && s.back() == '"')))
        return s.substr(1, s.size() - 2);
    return s;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, sep)) out.push_back(trim(cell));
    if (!line.empty() && line.back() == sep) out.push_back("");
    return out;
}

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open " + path);
    return in;
}

std::string format_score(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

LabeledDataset read_csv(const std::string& path, const std::string& label_column,
                        const std::string& positive_token) {
    std::ifstream in = open_or_throw(path);
    std::string line;
    if (!std::getline(in, line)) throw ParseError(1, "missing header row");
    const std::vector<std::string> header = split(line, ',');

    long label_idx = -1;
    for (std::size_t j = 0; j < header.size(); ++j)
        if (header[j] == label_column) label_idx = static_cast<long>(j);
    if (label_idx < 0)
        throw MissingLabelColumn("no column named '" + label_column + "' in " + path);

    std::vector<std::vector<double>> rows;
    std::vector<bool> labels;
    long line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const std::vector<std::string> cells = split(line, ',');
        if (cells.size() != header.size())
            throw ParseError(line_no, "expected " + std::to_string(header.size()) +
                                          " cells, got " + std::to_string(cells.size()));
        std::vector<double> row;
        row.reserve(cells.size() - 1);
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (static_cast<long>(j) == label_idx) {
                labels.push_back(cells[j] == positive_token);
                continue;
            }
            double v;
            if (!parse_double(cells[j], v))
                throw NonNumericFeature(static_cast<long>(rows.size()),
                                        static_cast<long>(j), cells[j]);
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw EmptyMatrix();

    Eigen::MatrixXd values(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) values(i, j) = rows[i][j];
    std::vector<std::string> names;
    for (std::size_t j = 0; j < header.size(); ++j)
        if (static_cast<long>(j) != label_idx) names.push_back(header[j]);
    return LabeledDataset{validate(std::move(values), std::move(names)),
                          std::move(labels)};
}

DataMatrix read_csv_features(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    std::string line;
    if (!std::getline(in, line)) throw ParseError(1, "missing header row");
    const std::vector<std::string> header = split(line, ',');

    std::vector<std::vector<double>> rows;
    long line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const std::vector<std::string> cells = split(line, ',');
        if (cells.size() != header.size())
            throw ParseError(line_no, "ragged row");
        std::vector<double> row;
        for (std::size_t j = 0; j < cells.size(); ++j) {
            double v;
            if (!parse_double(cells[j], v))
                throw NonNumericFeature(static_cast<long>(rows.size()),
                                        static_cast<long>(j), cells[j]);
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw EmptyMatrix();
    Eigen::MatrixXd values(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) values(i, j) = rows[i][j];
    return validate(std::move(values), header);
}

LabeledDataset read_arff(const std::string& path, bool require_outlier) {
    std::ifstream in = open_or_throw(path);

    struct Attribute {
        std::string name;
        bool numeric = true;
        std::vector<std::string> values;  // nominal domain
    };
    std::vector<Attribute> attrs;
    std::set<std::string> seen_names;
    long outlier_attr = -1, id_attr = -1;

    std::string line;
    long line_no = 0;
    bool in_data = false;

    std::vector<std::vector<double>> rows;
    std::vector<bool> labels;

    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '%') continue;

        if (!in_data) {
            const std::string lt = lower(t);
            if (lt.rfind("@relation", 0) == 0) continue;
            if (lt.rfind("@data", 0) == 0) {
                in_data = true;
                continue;
            }
            if (lt.rfind("@attribute", 0) == 0) {
                std::string rest = trim(t.substr(10));
                std::string name;
                if (!rest.empty() && (rest[0] == '\'' || rest[0] == '"')) {
                    const char quote = rest[0];
                    const std::size_t end = rest.find(quote, 1);
                    if (end == std::string::npos)
                        throw ParseError(line_no, "unterminated attribute name");
                    name = rest.substr(1, end - 1);
                    rest = trim(rest.substr(end + 1));
                } else {
                    const std::size_t sp = rest.find_first_of(" \t");
                    if (sp == std::string::npos)
                        throw ParseError(line_no, "attribute without a type");
                    name = rest.substr(0, sp);
                    rest = trim(rest.substr(sp));
                }
                if (!seen_names.insert(lower(name)).second)
                    throw ParseError(line_no, "duplicated attribute name '" + name + "'");

                Attribute attr;
                attr.name = name;
                const std::string kind = lower(rest);
                if (kind == "numeric" || kind == "real" || kind == "integer") {
                    attr.numeric = true;
                } else if (!rest.empty() && rest[0] == '{') {
                    const std::size_t close = rest.find('}');
                    if (close == std::string::npos)
                        throw ParseError(line_no, "unterminated nominal domain");
                    attr.numeric = false;
                    for (const std::string& v :
                         split(rest.substr(1, close - 1), ','))
                        attr.values.push_back(strip_quotes(v));
                } else {
                    throw UnsupportedAttributeKind("attribute '" + name +
                                                   "' has unsupported type: " + rest);
                }
                if (lower(name) == "outlier")
                    outlier_attr = static_cast<long>(attrs.size());
                else if (lower(name) == "id")
                    id_attr = static_cast<long>(attrs.size());
                else if (!attr.numeric)
                    throw UnsupportedAttributeKind(
                        "nominal attribute '" + name + "' is not outlier/id");
                attrs.push_back(std::move(attr));
                continue;
            }
            throw ParseError(line_no, "unexpected header line: " + t);
        }

        const std::vector<std::string> cells = split(t, ',');
        if (cells.size() != attrs.size())
            throw ParseError(line_no, "expected " + std::to_string(attrs.size()) +
                                          " values, got " + std::to_string(cells.size()));
        std::vector<double> row;
        for (std::size_t j = 0; j < cells.size(); ++j) {
            const std::string cell = strip_quotes(cells[j]);
            if (static_cast<long>(j) == id_attr) continue;
            if (static_cast<long>(j) == outlier_attr) {
                const auto& domain = attrs[j].values;
                if (!domain.empty() &&
                    std::find(domain.begin(), domain.end(), cell) == domain.end())
                    throw ParseError(line_no, "value '" + cell +
                                                  "' not in the nominal domain");
                labels.push_back(lower(cell) == "yes");
                continue;
            }
            double v;
            if (!parse_double(cell, v))
                throw ParseError(line_no, "non-numeric value '" + cell + "'");
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }

    if (require_outlier && outlier_attr < 0)
        throw MissingOutlierAttribute("no 'outlier' attribute in " + path);
    if (rows.empty()) throw EmptyMatrix();

    Eigen::MatrixXd values(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) values(i, j) = rows[i][j];
    std::vector<std::string> names;
    for (std::size_t j = 0; j < attrs.size(); ++j)
        if (static_cast<long>(j) != outlier_attr && static_cast<long>(j) != id_attr)
            names.push_back(attrs[j].name);
    return LabeledDataset{validate(std::move(values), std::move(names)),
                          std::move(labels)};
}

void write_scores(const DetectionResult& result, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoFailure("cannot write " + path);
    out << "index,score,flag\n";
    for (Eigen::Index i = 0; i < result.scores.size(); ++i)
        out << i << ',' << format_score(result.scores[i]) << ','
            << (result.flags[i] ? 1 : 0) << '\n';
    if (!out) throw IoFailure("write failed for " + path);
}

DetectionResult read_scores(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    std::string line;
    if (!std::getline(in, line) || trim(line) != "index,score,flag")
        throw ParseError(1, "bad score-file header");
    DetectionResult result;
    std::vector<double> scores;
    long line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const std::vector<std::string> cells = split(line, ',');
        if (cells.size() != 3) throw ParseError(line_no, "expected 3 cells");
        double v;
        if (!parse_double(cells[1], v)) throw ParseError(line_no, "bad score");
        scores.push_back(v);
        result.flags.push_back(cells[2] == "1");
    }
    result.scores = Eigen::Map<Eigen::VectorXd>(scores.data(), scores.size());
    return result;
}

void write_metrics(const std::vector<MetricRow>& rows, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoFailure("cannot write " + path);
    out << "dataset,method,cc,dr,prec,auc,seconds\n";
    auto cell = [](const std::optional<double>& v) {
        if (!v) return std::string();
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.3f", *v);
        return std::string(buf);
    };
    for (const auto& r : rows) {
        char secs[64];
        std::snprintf(secs, sizeof(secs), "%.3f", r.seconds);
        out << r.dataset << ',' << r.method << ',' << cell(r.cc) << ',' << cell(r.dr)
            << ',' << cell(r.prec) << ',' << cell(r.auc) << ',' << secs << '\n';
    }
    if (!out) throw IoFailure("write failed for " + path);
}

}  // namespace bp::io
