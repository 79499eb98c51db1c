#include "scw/trace.hpp"

#include <sstream>
#include <stdexcept>

#include "scw/io.hpp"

namespace scw {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::string trace_to_csv(const Trace& trace) {
  std::ostringstream out;
  out << "step,algorithm,event,cardinality,cost_num,cost_den,solution_bits_hex\n";
  for (const auto& r : trace) {
    out << r.step << ',' << r.algorithm << ',' << r.event << ',' << r.cardinality << ','
        << r.cost.numerator().str() << ',' << r.cost.denominator().str() << ',' << r.bits.to_hex()
        << '\n';
  }
  return out.str();
}

Trace trace_from_csv(const std::string& text, std::size_t m) {
  Trace trace;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    auto cols = split(line, ',');
    if (cols.size() != 7) throw std::invalid_argument("trace: malformed row: " + line);
    TraceRecord r;
    r.step = std::stoull(cols[0]);
    r.algorithm = cols[1];
    r.event = cols[2];
    r.cardinality = std::stoull(cols[3]);
    r.cost = Rational(BigInt(cols[4]), BigInt(cols[5]));
    r.bits = BitVec::from_hex(cols[6], m);
    r.accepted = r.event != "reject";
    trace.push_back(std::move(r));
  }
  return trace;
}

std::string prices_to_csv(const PriceMap& prices) {
  std::ostringstream out;
  out << "element,price_num,price_den\n";
  for (std::size_t i = 0; i < prices.price.size(); ++i) {
    if (!prices.price[i]) continue;
    out << (i + 1) << ',' << prices.price[i]->numerator().str() << ','
        << prices.price[i]->denominator().str() << '\n';
  }
  return out.str();
}

PriceMap prices_from_csv(const std::string& text, std::size_t n) {
  PriceMap prices(n);
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    auto cols = split(line, ',');
    if (cols.size() != 3) throw std::invalid_argument("prices: malformed row: " + line);
    std::size_t e = std::stoull(cols[0]);
    if (e < 1 || e > n) throw std::invalid_argument("prices: element out of range");
    prices.price[e - 1] = Rational(BigInt(cols[1]), BigInt(cols[2]));
  }
  return prices;
}

void save_trace(const Trace& trace, const std::filesystem::path& file) {
  io::write_file(file, trace_to_csv(trace));
}

Trace load_trace(const std::filesystem::path& file, std::size_t m) {
  return trace_from_csv(io::read_file(file), m);
}

void save_prices(const PriceMap& prices, const std::filesystem::path& file) {
  io::write_file(file, prices_to_csv(prices));
}

PriceMap load_prices(const std::filesystem::path& file, std::size_t n) {
  return prices_from_csv(io::read_file(file), n);
}

std::filesystem::path prices_path(const std::filesystem::path& trace_file) {
  std::filesystem::path p = trace_file;
  p += ".prices";
  return p;
}

}  // namespace scw
