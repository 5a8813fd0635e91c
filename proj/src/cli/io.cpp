#include "gschur/cli/io.hpp"

#include <algorithm>

#include "gschur/errors.hpp"

namespace gschur {

namespace {

std::string entry_text(const LaurentPoly& p, Convention conv) {
  if (p.is_zero()) return ".";
  return (conv == Convention::VInverse ? p.bar() : p).to_string();
}

std::string pad(const std::string& s, std::size_t width) { return s + std::string(width - s.size(), ' '); }

}  // namespace

Json laurent_to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [k, c] : p.descending()) {
    if (c.fits_slong_p()) out.push_back({k, c.get_si()});
    else out.push_back({k, c.get_str()});
  }
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("Laurent polynomial must be a JSON array");
  LaurentPoly p;
  for (const Json& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer())
      throw ParseError("Laurent term must be [exponent, coefficient]");
    mpz_class c;
    if (term[1].is_number_integer()) c = static_cast<long>(term[1].get<long long>());
    else if (term[1].is_string()) c = mpz_class(term[1].get<std::string>());
    else throw ParseError("Laurent coefficient must be an integer");
    p.add_term(term[0].get<int>(), c);
  }
  return p;
}

Json cyclo_to_json(const CycloNum& c) { return c.to_string(); }

CycloNum cyclo_from_json(int e, const Json& j) {
  if (!j.is_string()) throw ParseError("cyclotomic entry must be a string");
  return CycloNum::parse(e, j.get<std::string>());
}

Json matrix_to_json(const CycloMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(cyclo_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CycloMatrix matrix_from_json(int e, const Json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  CycloMatrix m(e, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw ParseError("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = cyclo_from_json(e, j[r][c]);
  }
  return m;
}

Json fock_to_json(const FockVector& x) {
  Json out = Json::array();
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it)
    out.push_back({{"partition", it->first.to_string()}, {"coefficient", laurent_to_json(it->second)}});
  return out;
}

FockVector fock_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("Fock vector must be an array of terms");
  FockVector x;
  for (const Json& term : j) {
    if (!term.contains("partition") || !term.contains("coefficient")) throw ParseError("malformed Fock term");
    x.add_term(Partition::parse(term["partition"].get<std::string>()), laurent_from_json(term["coefficient"]));
  }
  return x;
}

Json decomposition_to_json(const DecompositionMatrix& d, Convention conv, const std::vector<bool>& known) {
  Json labels = Json::array();
  for (const auto& l : d.labels) labels.push_back(l.to_string());
  Json rows = Json::array();
  for (std::size_t i = 0; i < d.labels.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < d.labels.size(); ++j) {
      if (!known.empty() && !known[j]) row.push_back(nullptr);
      else row.push_back(laurent_to_json(conv == Convention::VInverse ? d.entries[i][j].bar() : d.entries[i][j]));
    }
    rows.push_back(std::move(row));
  }
  return {{"n", d.n},
          {"e", d.e},
          {"convention", conv == Convention::V ? "v" : "v-inverse"},
          {"labels", labels},
          {"entries", rows}};
}

DecompositionMatrix decomposition_from_json(const Json& j, std::vector<bool>* known) {
  try {
    DecompositionMatrix d;
    d.n = j.at("n").get<int>();
    d.e = j.at("e").get<int>();
    const std::string conv = j.at("convention").get<std::string>();
    if (conv != "v" && conv != "v-inverse") throw ParseError("unknown convention " + conv);
    for (const Json& l : j.at("labels")) d.labels.push_back(Partition::parse(l.get<std::string>()));
    const std::size_t size = d.labels.size();
    d.entries.assign(size, std::vector<LaurentPoly>(size));
    if (known) known->assign(size, true);
    const Json& rows = j.at("entries");
    if (rows.size() != size) throw ParseError("entry rows do not match labels");
    for (std::size_t i = 0; i < size; ++i) {
      if (rows[i].size() != size) throw ParseError("entry columns do not match labels");
      for (std::size_t c = 0; c < size; ++c) {
        if (rows[i][c].is_null()) {
          if (known) (*known)[c] = false;
          continue;
        }
        LaurentPoly p = laurent_from_json(rows[i][c]);
        d.entries[i][c] = conv == "v" ? p : p.bar();
      }
    }
    return d;
  } catch (const Json::exception& ex) {
    throw ParseError(std::string("malformed decomposition matrix: ") + ex.what());
  }
}

std::string render_gap_text(const DecompositionMatrix& d, Convention conv, const std::vector<bool>& known) {
  const std::size_t size = d.labels.size();
  std::size_t width = 0;
  for (const auto& l : d.labels) width = std::max(width, l.gap_label().size());
  std::string out;
  for (std::size_t r = size; r-- > 0;) {
    out += pad(d.labels[r].gap_label(), width) + "|";
    for (std::size_t c = size; c-- > r;) {
      const bool unknown = !known.empty() && !known[c];
      out += " " + (unknown ? std::string("?") : entry_text(d.entries[r][c], conv));
    }
    out += "\n";
  }
  return out;
}

std::string render_classical(const DecompositionMatrix& d) {
  const std::size_t size = d.labels.size();
  std::size_t width = 0;
  for (const auto& l : d.labels) width = std::max(width, l.gap_label().size());
  std::string out;
  for (std::size_t r = 0; r < size; ++r) {
    out += pad(d.labels[r].gap_label(), width) + "|";
    const int rc = d.index_of(d.labels[r].conjugate());
    for (std::size_t c = 0; c <= r; ++c) {
      const mpz_class x = d.entries[rc][d.index_of(d.labels[c].conjugate())].at_one();
      out += " " + (x == 0 ? std::string(".") : x.get_str());
    }
    out += "\n";
  }
  return out;
}

std::string matrix_to_text(const CycloMatrix& m, const std::string& indent) {
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells[i][j] = m(i, j).to_string();
      width = std::max(width, cells[i][j].size());
    }
  std::string out;
  for (const auto& row : cells) {
    out += indent + "[";
    for (std::size_t j = 0; j < row.size(); ++j) {
      out += std::string(width - row[j].size(), ' ') + row[j];
      if (j + 1 < row.size()) out += " ";
    }
    out += "]\n";
  }
  return out;
}

}  // namespace gschur
