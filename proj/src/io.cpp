#include "agc/io.hpp"

#include "agc/minor_space.hpp"

#include <json.hpp>

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace agc {

namespace {

std::string big(const BigInt& v) { return v.str(); }

std::string set_text(const IndexSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out;
}

}  // namespace

void write_generator_text(std::ostream& os, const CodeParams& params, const LinearCode& code) {
  os << params.q << ' ' << params.l << ' ' << params.lp << ' ' << code.length() << ' ' << code.dimension() << '\n';
  const Matrix& g = code.generator();
  for (int r = 0; r < g.rows(); ++r) {
    for (int j = 0; j < g.cols(); ++j) os << (j ? " " : "") << g(r, j);
    os << '\n';
  }
}

GeneratorFile read_generator_text(std::istream& is) {
  unsigned q = 0, l = 0, lp = 0;
  long long n = 0, k = 0;
  if (!(is >> q >> l >> lp >> n >> k) || n < 0 || k < 0) throw std::runtime_error("generator file: bad header");
  const CodeParams params = CodeParams::make(q, l, lp);
  const Field field = Field::of_order(q);
  Matrix g(field, static_cast<int>(k), static_cast<int>(n));
  for (long long r = 0; r < k; ++r)
    for (long long j = 0; j < n; ++j) {
      unsigned v = 0;
      if (!(is >> v) || v >= q) throw std::runtime_error("generator file: bad entry");
      g(static_cast<int>(r), static_cast<int>(j)) = static_cast<Elem>(v);
    }
  return {params, std::move(g)};
}

std::string generator_json(const CodeParams& params, const LinearCode& code) {
  const Field& field = code.field();
  nlohmann::ordered_json header;
  header["q"] = params.q;
  header["l"] = params.l;
  header["lp"] = params.lp;
  header["n"] = code.length();
  header["k"] = code.dimension();
  header["field"] = {{"characteristic", field.characteristic()},
                     {"degree", field.degree()},
                     {"modulus", field.modulus()},
                     {"element_encoding", "index i = sum c_j p^j for the residue sum c_j t^j mod modulus"}};
  header["point_encoding"] = "column j is the l x lp matrix with entry (a,b) = digit (a-1)*lp + (b-1) of j in base q";
  nlohmann::ordered_json minors = nlohmann::ordered_json::array();
  for (const MinorIndex& m : minor_basis(shape_of(params))->entries())
    minors.push_back({{"rows", set_text(m.rows)}, {"cols", set_text(m.cols)}});
  header["row_order"] = std::move(minors);
  nlohmann::ordered_json doc;
  doc["header"] = std::move(header);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  const Matrix& g = code.generator();
  for (int r = 0; r < g.rows(); ++r) rows.push_back(std::vector<Elem>(g.row(r).begin(), g.row(r).end()));
  doc["rows"] = std::move(rows);
  return doc.dump() + "\n";
}

std::string param_table_text(const CodeParams& params) {
  const ParamTable t = param_table(params);
  std::ostringstream os;
  os << "q=" << params.q << " l=" << params.l << " lp=" << params.lp << '\n'
     << "n=" << big(t.n) << '\n'
     << "k=" << big(t.k) << '\n'
     << "d=" << big(t.d) << '\n'
     << "A_d=" << big(t.a_d) << '\n'
     << "group_order=" << big(t.group_order) << '\n'
     << "stabilizer_order=" << big(t.stabilizer_order) << '\n';
  return os.str();
}

std::string param_table_json(const CodeParams& params) {
  const ParamTable t = param_table(params);
  nlohmann::ordered_json doc;
  doc["q"] = params.q;
  doc["l"] = params.l;
  doc["lp"] = params.lp;
  // Decimal strings keep large values exact.
  doc["n"] = big(t.n);
  doc["k"] = big(t.k);
  doc["d"] = big(t.d);
  doc["A_d"] = big(t.a_d);
  doc["group_order"] = big(t.group_order);
  doc["stabilizer_order"] = big(t.stabilizer_order);
  return doc.dump() + "\n";
}

}  // namespace agc
