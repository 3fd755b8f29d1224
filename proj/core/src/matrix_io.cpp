#include "fracpow/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "fracpow/errors.hpp"

namespace fracpow {

namespace {

struct MarketEntry {
    int row;
    int col;
    double value;
};

struct MarketData {
    int rows = 0;
    int cols = 0;
    bool symmetric = false;
    std::vector<MarketEntry> entries;  // stored entries only, 0-based
};

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

// Next line that is neither empty nor a % comment.
bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '%')
            continue;
        return true;
    }
    return false;
}

MarketData parse_matrix_market(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open matrix file: " + path);

    std::string banner;
    if (!std::getline(in, banner))
        throw IoError("empty matrix file: " + path);
    std::istringstream head(lower(banner));
    std::string tag, object, format, field, storage;
    head >> tag >> object >> format >> field >> storage;
    if (tag != "%%matrixmarket" || object != "matrix")
        throw IoError("not a Matrix Market file: " + path);
    if (format != "coordinate" && format != "array")
        throw IoError("unsupported Matrix Market format: " + format);
    if (field != "real" && field != "integer")
        throw IoError("unsupported Matrix Market field: " + field);
    if (storage != "general" && storage != "symmetric")
        throw IoError("unsupported Matrix Market storage: " + storage);

    MarketData data;
    data.symmetric = storage == "symmetric";

    std::string line;
    if (!next_data_line(in, line))
        throw IoError("missing size line in " + path);
    std::istringstream size_line(line);

    if (format == "coordinate") {
        long long nnz = 0;
        if (!(size_line >> data.rows >> data.cols >> nnz) || data.rows <= 0 ||
            data.cols <= 0 || nnz < 0)
            throw IoError("malformed coordinate size line in " + path);
        data.entries.reserve(static_cast<std::size_t>(nnz));
        for (long long k = 0; k < nnz; ++k) {
            if (!next_data_line(in, line))
                throw IoError("unexpected end of file in " + path);
            std::istringstream entry(line);
            int i = 0, j = 0;
            double v = 0.0;
            if (!(entry >> i >> j >> v))
                throw IoError("malformed coordinate entry in " + path);
            if (i < 1 || i > data.rows || j < 1 || j > data.cols)
                throw IoError("coordinate index out of range in " + path);
            data.entries.push_back({i - 1, j - 1, v});
        }
    } else {
        if (!(size_line >> data.rows >> data.cols) || data.rows <= 0 || data.cols <= 0)
            throw IoError("malformed array size line in " + path);
        if (data.symmetric && data.rows != data.cols)
            throw IoError("symmetric array matrix must be square in " + path);
        // Column-major; symmetric storage holds the lower triangle only.
        for (int j = 0; j < data.cols; ++j) {
            for (int i = data.symmetric ? j : 0; i < data.rows; ++i) {
                double v = 0.0;
                if (!(in >> v))
                    throw IoError("unexpected end of array data in " + path);
                data.entries.push_back({i, j, v});
            }
        }
    }
    return data;
}

}  // namespace

Eigen::MatrixXd load_matrix_market_dense(const std::string& path) {
    const MarketData data = parse_matrix_market(path);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(data.rows, data.cols);
    for (const MarketEntry& e : data.entries) {
        m(e.row, e.col) = e.value;
        if (data.symmetric)
            m(e.col, e.row) = e.value;
    }
    return m;
}

Eigen::SparseMatrix<double> load_matrix_market_sparse(const std::string& path) {
    const MarketData data = parse_matrix_market(path);
    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(data.entries.size() * (data.symmetric ? 2 : 1));
    for (const MarketEntry& e : data.entries) {
        triplets.emplace_back(e.row, e.col, e.value);
        if (data.symmetric && e.row != e.col)
            triplets.emplace_back(e.col, e.row, e.value);
    }
    Eigen::SparseMatrix<double> m(data.rows, data.cols);
    m.setFromTriplets(triplets.begin(), triplets.end());
    m.makeCompressed();
    return m;
}

Eigen::VectorXd load_vector_text(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open vector file: " + path);
    std::vector<double> values;
    double v = 0.0;
    while (in >> v)
        values.push_back(v);
    if (!in.eof())
        throw IoError("malformed vector file: " + path);
    if (values.empty())
        throw IoError("vector file is empty: " + path);
    return Eigen::Map<Eigen::VectorXd>(values.data(),
                                       static_cast<Eigen::Index>(values.size()));
}

void save_vector_text(const std::string& path, const Eigen::VectorXd& v) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open output file: " + path);
    char buf[40];
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", v[i]);
        out << buf << '\n';
    }
    if (!out)
        throw IoError("failed writing vector file: " + path);
}

}  // namespace fracpow
