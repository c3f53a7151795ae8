#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "arbcycle/detail/random.hpp"
#include "arbcycle/snapshot.hpp"

namespace arbcycle {
namespace {

struct CatalogEntry {
  const char* code;
  double usd;  // rough unit value in USD
};

// Popularity order with rough unit values.
constexpr CatalogEntry kCatalog[] = {
    {"USD", 1.0},     {"BTC", 11000.0}, {"ETH", 1100.0},   {"EUR", 1.22},    {"USDT", 1.0},
    {"XRP", 1.4},     {"BCH", 1700.0},  {"LTC", 190.0},    {"JPY", 0.0090},  {"KRW", 0.00093},
    {"ETC", 30.0},    {"IDR", 7.4e-5},  {"ADA", 0.6},      {"XLM", 0.5},     {"NEO", 130.0},
    {"EOS", 12.0},    {"DASH", 900.0},  {"XMR", 350.0},    {"SC", 0.025},    {"ZEC", 500.0},
    {"TRX", 0.08},    {"GBP", 1.38},    {"CNY", 0.155},    {"DOGE", 0.009},  {"XEM", 0.9},
    {"QTUM", 45.0},   {"OMG", 17.0},    {"BTG", 200.0},    {"LSK", 20.0},    {"ZRX", 1.5},
    {"REP", 70.0},    {"BAT", 0.5},     {"STRAT", 10.0},   {"WAVES", 9.0},   {"DGB", 0.05},
    {"BTS", 0.4},     {"STEEM", 4.5},   {"SNT", 0.2},      {"ARDR", 1.0},    {"KMD", 5.0},
};
constexpr std::size_t kCatalogSize = sizeof(kCatalog) / sizeof(kCatalog[0]);

// Popularity decay: currency i is listed at about markets / (1 + kDecay * i)
// markets.
constexpr double kDecay = 0.23;

struct Currency {
  std::string code;
  double value = 1.0;
};

std::vector<Currency> make_currencies(std::size_t count, detail::Rng& rng) {
  std::vector<Currency> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (i < kCatalogSize) {
      out.push_back({kCatalog[i].code, kCatalog[i].usd});
    } else {
      char code[24];
      std::snprintf(code, sizeof code, "X%03zu", i);
      out.push_back({code, std::pow(10.0, rng.uniform(-4.5, 3.5))});
    }
  }
  return out;
}

std::string market_name(std::size_t m) { return "M" + std::to_string(m + 1); }

// Quote haircut delta in [1 - 2e-7, 1 - 1e-8]: every quote loses a little,
// and epsilon / delta stays below one for epsilon <= 0.999999.
double quote_haircut(detail::Rng& rng) { return 1.0 - rng.uniform(1e-8, 2e-7); }

}  // namespace

std::vector<Quote> gen_synthetic(const SyntheticSpec& spec) {
  if (spec.markets == 0) throw std::invalid_argument("synthetic: need at least one market");
  if (spec.currencies < 2) throw std::invalid_argument("synthetic: need at least two currencies");
  if (!(spec.density > 0.0 && spec.density <= 1.0))
    throw std::invalid_argument("synthetic: density must lie in (0, 1]");
  double dispersion = spec.dispersion.value_or(spec.planted ? kMaxPlantedDispersion : 1e-3);
  if (!(dispersion >= 0.0 && dispersion < 0.1))
    throw std::invalid_argument("synthetic: dispersion must lie in [0, 0.1)");
  std::size_t planted_len = 0;
  if (spec.planted) {
    planted_len = spec.planted->length;
    if (planted_len < 3) throw std::invalid_argument("synthetic: planted cycle needs length >= 3");
    if (planted_len > spec.currencies)
      throw std::invalid_argument("synthetic: planted cycle longer than the currency count");
    if (!(spec.planted->product > 1.0) || !std::isfinite(spec.planted->product))
      throw std::invalid_argument("synthetic: planted product must exceed 1");
    if (dispersion > kMaxPlantedDispersion)
      throw std::invalid_argument("synthetic: planted cycles need dispersion <= 1e-5");
  }

  detail::Rng rng(spec.seed, /*stream=*/0x517e7ULL);
  const auto currencies = make_currencies(spec.currencies, rng);
  const std::size_t background = spec.currencies - planted_len;
  std::vector<Quote> quotes;

  if (spec.planted) {
    const auto first = background;
    std::vector<double> rates(planted_len);
    const double per_hop = std::pow(spec.planted->product, 1.0 / double(planted_len));
    double partial = 1.0;
    for (std::size_t i = 0; i + 1 < planted_len; ++i) {
      rates[i] = currencies[first + i].value / currencies[first + i + 1].value * per_hop;
      partial *= rates[i];
    }
    rates.back() = spec.planted->product / partial;
    for (std::size_t i = 0; i < planted_len; ++i)
      quotes.push_back(Quote{market_name(0), currencies[first + i].code,
                             currencies[first + (i + 1) % planted_len].code, rates[i]});
  }

  // members[m]: background currency indices listed at market m, in
  // popularity order.
  std::vector<std::vector<std::size_t>> members(spec.markets);
  for (std::size_t c = 0; c < background; ++c) {
    const double expected = double(spec.markets) / (1.0 + kDecay * double(c));
    auto count = static_cast<std::size_t>(std::floor(expected + rng.uniform01()));
    count = std::clamp<std::size_t>(count, 1, spec.markets);
    for (const auto m : detail::sample_indices(spec.markets, count, rng))
      members[m].push_back(c);
  }
  for (auto& listed : members) {
    for (std::size_t c = 0; listed.size() < 2 && c < background; ++c)
      if (std::find(listed.begin(), listed.end(), c) == listed.end()) listed.push_back(c);
    std::sort(listed.begin(), listed.end());
  }

  for (std::size_t m = 0; m < spec.markets; ++m) {
    const auto& listed = members[m];
    if (listed.size() < 2) continue;
    std::vector<double> price(listed.size());
    for (std::size_t i = 0; i < listed.size(); ++i)
      price[i] = currencies[listed[i]].value * (1.0 + rng.uniform(-dispersion, dispersion));
    auto quote = [&](std::size_t base, std::size_t counter) {
      const double ask = price[base] / price[counter] * quote_haircut(rng);
      quotes.push_back(Quote{market_name(m), currencies[listed[base]].code,
                             currencies[listed[counter]].code, ask});
    };
    for (std::size_t i = 1; i < listed.size(); ++i) quote(i, 0);
    for (std::size_t a = 1; a < listed.size(); ++a)
      for (std::size_t b = a + 1; b < listed.size(); ++b)
        if (rng.chance(spec.density)) quote(b, a);
  }
  return quotes;
}

}  // namespace arbcycle
