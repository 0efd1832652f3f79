#include "seqarray/oeis_io.hpp"

#include "seqarray/analysis.hpp"
#include "seqarray/errors.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace seqarray::io {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

BigInt parseInteger(const std::string& token, const std::string& context) {
  const std::string t = trim(token);
  if (t.empty()) throw FormatError("empty integer in " + context);
  size_t i = t[0] == '-' || t[0] == '+' ? 1 : 0;
  if (i == t.size()) throw FormatError("bad integer '" + t + "' in " + context);
  for (; i < t.size(); ++i) {
    if (t[i] < '0' || t[i] > '9') {
      throw FormatError("bad integer '" + t + "' in " + context);
    }
  }
  return BigInt(t);
}

std::vector<std::string> splitOn(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

std::vector<BigInt> parseIntegerList(const std::string& body,
                                     const std::string& context) {
  std::vector<BigInt> values;
  for (const std::string& part : splitOn(body, ',')) {
    values.push_back(parseInteger(part, context));
  }
  return values;
}

}  // namespace

std::string exportBFile(const std::vector<BigInt>& terms, long long offset) {
  std::ostringstream out;
  long long index = offset;
  for (const BigInt& term : terms) {
    out << index << " " << term << "\n";
    ++index;
  }
  return out.str();
}

BFile parseBFile(const std::string& text) {
  BFile result;
  std::istringstream in(text);
  std::string line;
  bool haveFirst = false;
  long long expected = 0;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string indexToken, valueToken, extra;
    if (!(fields >> indexToken >> valueToken) || fields >> extra) {
      throw FormatError("bad b-file line: '" + line + "'");
    }
    const long long index =
        parseInteger(indexToken, "b-file").convert_to<long long>();
    if (!haveFirst) {
      result.offset = index;
      expected = index;
      haveFirst = true;
    }
    if (index != expected) {
      throw FormatError("b-file index " + std::to_string(index) +
                        " is not consecutive");
    }
    result.terms.push_back(parseInteger(valueToken, "b-file"));
    ++expected;
  }
  return result;
}

OeisStrippedIndex OeisStrippedIndex::fromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open stripped dump '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return fromText(buffer.str());
}

OeisStrippedIndex OeisStrippedIndex::fromText(const std::string& text) {
  OeisStrippedIndex index;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto space = line.find_first_of(" \t");
    if (space == std::string::npos || line[0] != 'A') {
      throw FormatError("bad stripped line: '" + line + "'");
    }
    const std::string id = line.substr(0, space);
    std::string body = trim(line.substr(space + 1));
    // Terms arrive as ",1,2,3," with delimiters on both ends.
    if (!body.empty() && body.front() == ',') body.erase(body.begin());
    if (!body.empty() && body.back() == ',') body.pop_back();
    if (body.empty()) throw FormatError("no terms on stripped line: '" + line + "'");
    index.entries_[id] = parseIntegerList(body, "stripped dump " + id);
  }
  return index;
}

std::vector<std::string> lookupStripped(const OeisStrippedIndex& index,
                                        const std::vector<BigInt>& prefix,
                                        long long minMatch) {
  if (static_cast<long long>(prefix.size()) < minMatch) {
    throw SpecError("lookup needs at least " + std::to_string(minMatch) +
                    " terms, got " + std::to_string(prefix.size()));
  }
  std::vector<std::string> matches;
  for (const auto& [id, terms] : index.entries()) {
    for (size_t start = 0; start < 3; ++start) {
      if (start + prefix.size() > terms.size()) break;
      if (std::equal(prefix.begin(), prefix.end(), terms.begin() + start)) {
        matches.push_back(id);
        break;
      }
    }
  }
  return matches;
}

namespace {

// Innermost helper for parseSpecText; split out so phi can recurse.
SequenceSpec parseSpecImpl(const std::string& raw, unsigned long long maxWidth,
                           long long phiHorizon) {
  const std::string text = trim(raw);
  if (text.empty()) throw SpecError("empty sequence spec");

  if (const SequenceRecord* record = findRecord(text)) return record->spec;
  if (text == "identity") return SequenceSpec::affine(1, 0);
  if (text == "fib" || text == "fibonacci") return SequenceSpec::fibonacci();
  if (text == "triangular") return SequenceSpec::triangular();
  if (text == "square") return SequenceSpec::square();
  if (text == "pronic") return SequenceSpec::pronic();
  if (text == "cube") return SequenceSpec::cube();
  if (text == "catalan" || text == "catalan-numbers") {
    return SequenceSpec::catalanNumbers();
  }
  if (text == "primes") return SequenceSpec::primes();
  if (text == "three-halves" || text == "floor-three-halves") {
    return SequenceSpec::floorThreeHalves();
  }
  if (text == "repetition") return SequenceSpec::repetition();

  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw SpecError("unknown sequence spec '" + text + "'");
  }
  const std::string head = text.substr(0, colon);
  const std::string body = text.substr(colon + 1);

  if (head == "constant") {
    return SequenceSpec::constant(parseInteger(body, "constant spec"));
  }
  if (head == "affine") {
    const auto parts = splitOn(body, ',');
    if (parts.size() != 2) throw SpecError("affine needs two parameters");
    return SequenceSpec::affine(parseInteger(parts[0], "affine spec"),
                                parseInteger(parts[1], "affine spec"));
  }
  if (head == "power") {
    return SequenceSpec::power(parseInteger(body, "power spec"));
  }
  if (head == "primes") {
    return SequenceSpec::primes(
        parseInteger(body, "primes spec").convert_to<long long>());
  }
  if (head == "explicit") {
    return SequenceSpec::explicitList(parseIntegerList(body, "explicit spec"));
  }
  if (head == "phi") {
    if (body.empty() || body[0] != '(') {
      throw SpecError("phi spec must look like phi:(inner)[:horizon]");
    }
    int depth = 0;
    size_t close = std::string::npos;
    for (size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '(') ++depth;
      if (body[i] == ')' && --depth == 0) {
        close = i;
        break;
      }
    }
    if (close == std::string::npos) throw SpecError("unbalanced phi spec");
    const std::string inner = body.substr(1, close - 1);
    long long horizon = phiHorizon;
    if (close + 1 < body.size()) {
      if (body[close + 1] != ':') throw SpecError("bad phi horizon suffix");
      horizon = parseInteger(body.substr(close + 2), "phi horizon")
                    .convert_to<long long>();
    }
    const SequenceSpec innerSpec = parseSpecImpl(inner, maxWidth, phiHorizon);
    return phi(innerSpec, horizon, maxWidth, trim(inner));
  }
  throw SpecError("unknown sequence spec '" + text + "'");
}

}  // namespace

SequenceSpec parseSpecText(const std::string& text, unsigned long long maxWidth,
                           long long phiHorizon) {
  return parseSpecImpl(text, maxWidth, phiHorizon);
}

std::string formatSpecText(const SequenceSpec& spec) {
  switch (spec.kind()) {
    case SequenceKind::Constant:
      return "constant:" + spec.paramA().str();
    case SequenceKind::Affine:
      if (spec.paramA() == 1 && spec.paramB() == 0) return "identity";
      return "affine:" + spec.paramA().str() + "," + spec.paramB().str();
    case SequenceKind::Power:
      return "power:" + spec.paramA().str();
    case SequenceKind::Fibonacci:
      return "fib";
    case SequenceKind::Triangular:
      return "triangular";
    case SequenceKind::Square:
      return "square";
    case SequenceKind::Pronic:
      return "pronic";
    case SequenceKind::Cube:
      return "cube";
    case SequenceKind::CatalanNumbers:
      return "catalan";
    case SequenceKind::Primes:
      return spec.horizon() ? "primes:" + std::to_string(*spec.horizon())
                            : "primes";
    case SequenceKind::FloorThreeHalves:
      return "three-halves";
    case SequenceKind::Repetition:
      return "repetition";
    case SequenceKind::Explicit: {
      std::string out = "explicit:";
      for (size_t i = 0; i < spec.storedTerms().size(); ++i) {
        if (i > 0) out += ",";
        out += spec.storedTerms()[i].str();
      }
      return out;
    }
    case SequenceKind::PhiOf: {
      if (spec.innerLabel().empty()) {
        // No inner description kept; the terms themselves are the spec.
        std::string out = "explicit:";
        for (size_t i = 0; i < spec.storedTerms().size(); ++i) {
          if (i > 0) out += ",";
          out += spec.storedTerms()[i].str();
        }
        return out;
      }
      return "phi:(" + spec.innerLabel() +
             "):" + std::to_string(spec.storedTerms().size());
    }
  }
  throw SpecError("unknown sequence kind");
}

nlohmann::json arrayToJson(const OutputArray& array,
                           const std::string& specText,
                           unsigned long long widthCap) {
  nlohmann::json root;
  root["spec"] = specText;
  nlohmann::json yList = nlohmann::json::array();
  for (const BigInt& y : array.inputPrefix()) yList.push_back(y.str());
  root["y"] = std::move(yList);

  nlohmann::json rows = nlohmann::json::array();
  nlohmann::json sums = nlohmann::json::array();
  for (long long n = 1; n <= array.rowCount(); ++n) {
    const CompressedRow& row = array.row(n);
    if (row.logicalWidth() <= widthCap) {
      nlohmann::json expanded = nlohmann::json::array();
      for (unsigned long long k = 0; k < row.logicalWidth(); ++k) {
        expanded.push_back(row.at(k).str());
      }
      rows.push_back(std::move(expanded));
    } else {
      nlohmann::json compressed;
      nlohmann::json entries = nlohmann::json::array();
      for (const BigInt& value : row.prefix) entries.push_back(value.str());
      compressed["entries"] = std::move(entries);
      compressed["plateau"] = {{"value", row.plateauValue.str()},
                               {"length", row.plateauLength}};
      rows.push_back(std::move(compressed));
    }
    sums.push_back(array.rowSum(n).str());
  }
  root["rows"] = std::move(rows);
  root["W"] = std::move(sums);
  return root;
}

OutputArray arrayFromJson(const nlohmann::json& root) {
  if (!root.contains("y") || !root.contains("rows")) {
    throw FormatError("array JSON needs 'y' and 'rows'");
  }
  std::vector<BigInt> y;
  for (const auto& item : root.at("y")) {
    y.push_back(parseInteger(item.get<std::string>(), "array JSON y"));
  }
  std::vector<CompressedRow> rows;
  for (const auto& item : root.at("rows")) {
    CompressedRow row;
    if (item.is_array()) {
      for (const auto& value : item) {
        row.prefix.push_back(
            parseInteger(value.get<std::string>(), "array JSON row"));
      }
      row.plateauValue = row.prefix.empty() ? BigInt(0) : row.prefix.back();
      row.plateauLength = 0;
    } else {
      for (const auto& value : item.at("entries")) {
        row.prefix.push_back(
            parseInteger(value.get<std::string>(), "array JSON row"));
      }
      row.plateauValue = parseInteger(
          item.at("plateau").at("value").get<std::string>(), "array JSON");
      row.plateauLength = item.at("plateau").at("length")
                              .get<unsigned long long>();
    }
    rows.push_back(std::move(row));
  }
  if (y.size() != rows.size()) {
    throw FormatError("array JSON row count does not match input prefix");
  }
  return OutputArray(std::move(y), std::move(rows));
}

std::string renderTable(const OutputArray& array, unsigned long long widthCap) {
  unsigned long long width = 0;
  for (long long n = 1; n <= array.rowCount(); ++n) {
    width = std::max(width, array.row(n).logicalWidth());
  }
  const bool truncated = width > widthCap;
  if (truncated) width = widthCap;

  size_t cell = 1;
  for (long long n = 1; n <= array.rowCount(); ++n) {
    const CompressedRow& row = array.row(n);
    for (unsigned long long k = 0; k < width; ++k) {
      cell = std::max(cell, row.at(k).str().size());
    }
  }

  std::ostringstream out;
  for (long long n = 1; n <= array.rowCount(); ++n) {
    const CompressedRow& row = array.row(n);
    for (unsigned long long k = 0; k < width; ++k) {
      if (k > 0) out << " ";
      out << std::setw(static_cast<int>(cell)) << row.at(k).str();
    }
    if (truncated && row.logicalWidth() > width) {
      out << "  ... (" << row.logicalWidth() - width
          << " more columns, plateau " << row.plateauValue.str() << " x"
          << row.plateauLength << ")";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace seqarray::io
