// seqarray: build output arrays from nondecreasing integer input sequences,
// stream their row sums, fit column polynomials, check bounds, and exchange
// results in OEIS-friendly formats. All arithmetic is exact.

#include "seqarray/analysis.hpp"
#include "seqarray/engine.hpp"
#include "seqarray/errors.hpp"
#include "seqarray/oeis_io.hpp"
#include "seqarray/oracle.hpp"
#include "seqarray/polynomials.hpp"
#include "seqarray/sequence.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace seqarray;

// Exit codes: 0 ok, 1 check failed (verify/bounds), 2 usage, 3 bad spec or
// domain error, 4 width limit, 5 budget, 6 file format.
constexpr int kExitCheckFailed = 1;
constexpr int kExitSpec = 3;
constexpr int kExitWidth = 4;
constexpr int kExitBudget = 5;
constexpr int kExitFormat = 6;

struct Options {
  std::string specText;
  unsigned long long maxWidth = kDefaultMaxWidth;
  long long rows = 8;
  long long terms = 10;
  long long n = 3;
  long long k = 2;
  long long nMax = 10;
  long long offset = 1;
  long long minMatch = io::kDefaultMinMatch;
  long long verifyExtra = kDefaultVerifyExtra;
  long long phiHorizon = io::kDefaultPhiHorizon;
  unsigned long long widthCap = 0;
  bool includeW0 = false;
  bool viaHeinz = false;
  bool json = false;
  bool ascending = false;
  std::string strippedPath;
  std::string name;
};

SequenceSpec spec(const Options& opt) {
  return io::parseSpecText(opt.specText, opt.maxWidth, opt.phiHorizon);
}

void printTerms(const std::vector<BigInt>& terms) {
  for (size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) std::cout << " ";
    std::cout << terms[i];
  }
  std::cout << "\n";
}

std::vector<BigInt> sumsFor(const Options& opt) {
  std::vector<BigInt> w = outputSequence(spec(opt), opt.terms, opt.maxWidth);
  if (opt.includeW0) w.insert(w.begin(), BigInt(1));
  return w;
}

int cmdSeqList() {
  for (const SequenceRecord& record : catalog()) {
    std::cout << record.name << "\t"
              << (record.oeisId.empty() ? "not in OEIS" : record.oeisId)
              << "\tW: ";
    for (size_t i = 0; i < record.expectedOutputPrefix.size(); ++i) {
      if (i > 0) std::cout << ",";
      std::cout << record.expectedOutputPrefix[i];
    }
    if (record.discrepancy) std::cout << "\t[disputed]";
    std::cout << "\n";
  }
  return 0;
}

int cmdSeqShow(const Options& opt) {
  const SequenceRecord* record = findRecord(opt.name);
  if (record == nullptr) {
    throw SpecError("no catalog entry named '" + opt.name + "'");
  }
  std::cout << "name:   " << record->name << "\n";
  std::cout << "spec:   " << io::formatSpecText(record->spec) << "\n";
  std::cout << "y:      ";
  long long horizon = 10;
  if (record->spec.horizon() && *record->spec.horizon() < horizon) {
    horizon = *record->spec.horizon();
  }
  printTerms(record->spec.prefix(horizon));
  std::cout << "W:      ";
  printTerms(record->expectedOutputPrefix);
  if (record->prefixIncludesW0) {
    std::cout << "        (leading term is the conventional W(0) = 1)\n";
  }
  std::cout << "oeis:   "
            << (record->oeisId.empty() ? "not in OEIS" : record->oeisId)
            << "\n";
  if (!record->notes.empty()) std::cout << "notes:  " << record->notes << "\n";
  return 0;
}

int cmdArray(const Options& opt) {
  const OutputArray array = build(spec(opt), opt.rows, opt.maxWidth);
  if (opt.json) {
    const auto cap = opt.widthCap ? opt.widthCap : io::kDefaultJsonWidthCap;
    std::cout << io::arrayToJson(array, opt.specText, cap).dump(2) << "\n";
  } else {
    const auto cap = opt.widthCap ? opt.widthCap : io::kDefaultTableWidthCap;
    std::cout << io::renderTable(array, cap);
  }
  return 0;
}

int cmdSums(const Options& opt) {
  printTerms(sumsFor(opt));
  return 0;
}

int cmdStats(const Options& opt) {
  RowStats s;
  if (opt.viaHeinz) {
    const SequenceSpec parsed = spec(opt);
    if (parsed.kind() != SequenceKind::Power || parsed.paramA() != 2) {
      throw SpecError("--via-heinz applies only to the power:2 input");
    }
    s = bracketStatsViaHeinz(opt.n);
  } else {
    s = stats(spec(opt), opt.n, opt.maxWidth);
  }
  std::cout << renderStats(s);
  return 0;
}

int cmdPoly(const Options& opt) {
  const RationalPolynomial p =
      columnPolynomial(spec(opt), opt.k, opt.verifyExtra, opt.maxWidth);
  if (opt.json) {
    nlohmann::json root;
    root["spec"] = opt.specText;
    root["k"] = opt.k;
    nlohmann::json coefficients = nlohmann::json::array();
    for (const auto& [num, den] : p.coefficientPairs()) {
      coefficients.push_back({num.str(), den.str()});
    }
    root["coefficients"] = std::move(coefficients);
    std::cout << root.dump(2) << "\n";
  } else if (opt.ascending) {
    std::cout << p.renderAscending() << "\n";
  } else {
    std::cout << p.renderCommonDenominator() << "\n";
  }
  return 0;
}

int cmdBounds(const Options& opt) {
  const BoundsReport report = checkBounds(spec(opt), opt.nMax, opt.maxWidth);
  std::cout << renderReport(report);
  return report.ok ? 0 : kExitCheckFailed;
}

int cmdVerify(const Options& opt) {
  const SequenceSpec parsed = spec(opt);
  const OutputArray array = build(parsed, opt.nMax, opt.maxWidth);
  for (long long n = 1; n <= opt.nMax; ++n) {
    const std::vector<BigInt> counted = oracle::countRow(parsed, n);
    for (size_t k = 0; k < counted.size(); ++k) {
      if (counted[k] != array.entry(n, BigInt(k))) {
        std::cout << "mismatch at row " << n << " column " << k
                  << ": recurrence " << array.entry(n, BigInt(k))
                  << ", enumeration " << counted[k] << "\n";
        return kExitCheckFailed;
      }
    }
    std::cout << "row " << n << " ok (" << counted.size() << " columns)\n";
  }
  std::cout << "all rows agree with the enumeration count\n";
  return 0;
}

int cmdBFile(const Options& opt) {
  std::cout << io::exportBFile(sumsFor(opt), opt.offset);
  return 0;
}

int cmdLookup(const Options& opt) {
  const io::OeisStrippedIndex index =
      io::OeisStrippedIndex::fromFile(opt.strippedPath);
  const auto matches = io::lookupStripped(index, sumsFor(opt), opt.minMatch);
  if (matches.empty()) {
    std::cerr << "no match among " << index.size() << " sequences\n";
  } else {
    for (const std::string& id : matches) std::cout << id << "\n";
  }
  return 0;
}

int cmdPhi(const Options& opt) {
  const SequenceSpec result =
      phi(spec(opt), opt.terms, opt.maxWidth, opt.specText);
  printTerms(result.storedTerms());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "seqarray: exact output arrays, row sums, and column polynomials of "
      "nondecreasing integer input sequences"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--max-width", opt.maxWidth,
                 "column limit for any built row (default 10000000)")
      ->envname("SEQARRAY_MAX_WIDTH");

  auto addSpec = [&opt](CLI::App* cmd) {
    cmd->add_option("spec", opt.specText,
                    "input sequence, e.g. fib, power:2, affine:2,-1, "
                    "explicit:1,1,2, phi:(identity):8")
        ->required();
  };

  CLI::App* seq = app.add_subcommand("seq", "catalog of built-in sequences");
  CLI::App* seqList = seq->add_subcommand("list", "list catalog entries");
  CLI::App* seqShow = seq->add_subcommand("show", "show one catalog entry");
  seqShow->add_option("name", opt.name, "catalog entry name")->required();
  seq->require_subcommand(1);

  CLI::App* array = app.add_subcommand("array", "print the output array");
  addSpec(array);
  array->add_option("--rows", opt.rows, "rows to build (default 8)");
  array->add_flag("--json", opt.json, "emit JSON instead of a table");
  array->add_option("--width-cap", opt.widthCap,
                    "columns to expand before compressing the output");

  CLI::App* sums = app.add_subcommand("sums", "print the output sequence");
  addSpec(sums);
  sums->add_option("--terms", opt.terms, "number of terms (default 10)");
  sums->add_flag("--include-w0", opt.includeW0,
                 "prepend the conventional W(0) = 1");

  CLI::App* statsCmd =
      app.add_subcommand("stats", "three-part row statistics T/M/S");
  addSpec(statsCmd);
  statsCmd->add_option("--n", opt.n, "row index (n >= 3)")->required();
  statsCmd->add_flag("--via-heinz", opt.viaHeinz,
                     "use the bracket binomial recurrence (power:2 only)");

  CLI::App* poly = app.add_subcommand("poly", "fit a column polynomial");
  addSpec(poly);
  poly->add_option("--k", opt.k, "column index")->required();
  poly->add_option("--verify-extra", opt.verifyExtra,
                   "extra rows checked against the fit (default 4)");
  poly->add_flag("--json", opt.json, "emit coefficient pairs as JSON");
  poly->add_flag("--ascending", opt.ascending,
                 "print lowest powers first instead of the quotient form");

  CLI::App* bounds =
      app.add_subcommand("bounds", "sweep entry and row-sum bounds");
  addSpec(bounds);
  bounds->add_option("--n-max", opt.nMax, "rows to sweep")->required();

  CLI::App* verify = app.add_subcommand(
      "verify", "cross-check the recurrence against direct counting");
  addSpec(verify);
  verify->add_option("--n-max", opt.nMax, "rows to check")->required();

  CLI::App* bfile = app.add_subcommand("bfile", "emit the output sequence "
                                                "as an OEIS b-file");
  addSpec(bfile);
  bfile->add_option("--terms", opt.terms, "number of terms")->required();
  bfile->add_option("--offset", opt.offset, "first index (default 1)");
  bfile->add_flag("--include-w0", opt.includeW0,
                  "prepend the conventional W(0) = 1");

  CLI::App* lookup = app.add_subcommand(
      "lookup", "search an OEIS stripped dump for the output sequence");
  addSpec(lookup);
  lookup->add_option("--stripped", opt.strippedPath, "path to the dump")
      ->required();
  lookup->add_option("--terms", opt.terms, "terms to compare (default 10)");
  lookup->add_option("--min-match", opt.minMatch,
                     "minimum terms required (default 8)");

  CLI::App* phiCmd = app.add_subcommand(
      "phi", "print the output sequence as a reusable input sequence");
  addSpec(phiCmd);
  phiCmd->add_option("--terms", opt.terms, "number of terms")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (seqList->parsed()) return cmdSeqList();
    if (seqShow->parsed()) return cmdSeqShow(opt);
    if (array->parsed()) return cmdArray(opt);
    if (sums->parsed()) return cmdSums(opt);
    if (statsCmd->parsed()) return cmdStats(opt);
    if (poly->parsed()) return cmdPoly(opt);
    if (bounds->parsed()) return cmdBounds(opt);
    if (verify->parsed()) return cmdVerify(opt);
    if (bfile->parsed()) return cmdBFile(opt);
    if (lookup->parsed()) return cmdLookup(opt);
    if (phiCmd->parsed()) return cmdPhi(opt);
  } catch (const WidthLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitWidth;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSpec;
  }
  return 0;
}
