#include "orbent/probvec.hpp"

#include <algorithm>
#include <numeric>

#include "orbent/errors.hpp"

namespace orbent {

namespace {

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

ProbVec::ProbVec(std::vector<Rational> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw InvalidArgument("probability vector must be nonempty");
  Rational total;
  mpz_class lcm = 1;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (probs_[i].sign() <= 0) {
      throw InvalidArgument("probability entry " + std::to_string(i + 1) + " is not strictly positive (" +
                            probs_[i].to_string() + "); drop zero-probability symbols first");
    }
    total += probs_[i];
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), probs_[i].value().get_den_mpz_t());
  }
  if (total != Rational(1)) {
    throw InvalidArgument("probabilities sum to " + total.to_string() + ", expected 1");
  }
  denominator_ = Natural(std::move(lcm));
}

ProbVec ProbVec::parse(std::string_view text) {
  if (text.find('.') != std::string_view::npos) {
    throw ParseError("decimal probabilities are not accepted; write exact fractions such as 1/3,2/3");
  }
  std::vector<Rational> probs;
  for (std::string_view item : split_commas(text)) {
    if (!item.empty() && item.front() == '-') throw ParseError("negative probability '" + std::string(item) + "'");
    probs.push_back(Rational::parse(item));
  }
  try {
    return ProbVec(std::move(probs));
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("invalid distribution '") + std::string(text) + "': " + e.what());
  }
}

ProbVec ProbVec::uniform(std::size_t k) {
  if (k == 0) throw InvalidArgument("uniform distribution needs k >= 1");
  return ProbVec(std::vector<Rational>(k, Rational(1, static_cast<std::int64_t>(k))));
}

bool ProbVec::admits(std::uint64_t n) const {
  return n > 0 && Natural(n).divisible_by(denominator_);
}

std::vector<std::uint64_t> ProbVec::counts(std::uint64_t n) const {
  if (!admits(n)) {
    throw InvalidArgument("n = " + std::to_string(n) + " is not a multiple of the common denominator " +
                          denominator_.to_string() + " of " + to_string());
  }
  std::vector<std::uint64_t> out;
  out.reserve(probs_.size());
  for (const Rational& p : probs_) {
    const Rational scaled = p * Rational(Natural(n));
    out.push_back(Natural(scaled.numerator()).to_u64());
  }
  return out;
}

std::string ProbVec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (i) out += ",";
    out += probs_[i].to_string();
  }
  return out;
}

CoarseMap::CoarseMap(std::vector<std::size_t> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw InvalidArgument("coarse map needs at least one block");
  for (std::size_t b : blocks_) {
    if (b == 0) throw InvalidArgument("coarse map blocks must be positive (surjectivity)");
  }
  domain_size_ = std::accumulate(blocks_.begin(), blocks_.end(), std::size_t{0});
}

CoarseMap CoarseMap::parse(std::string_view text) {
  std::vector<std::size_t> blocks;
  for (std::string_view item : split_commas(text)) {
    if (item.empty() || item.size() > 9 || item.find_first_not_of("0123456789") != std::string_view::npos) {
      throw ParseError("block sizes must be positive integers, got '" + std::string(item) + "'");
    }
    blocks.push_back(static_cast<std::size_t>(std::stoul(std::string(item))));
  }
  try {
    return CoarseMap(std::move(blocks));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

CoarseMap CoarseMap::identity(std::size_t k) { return CoarseMap(std::vector<std::size_t>(k, 1)); }

std::size_t CoarseMap::block_begin(std::size_t j) const {
  return std::accumulate(blocks_.begin(), blocks_.begin() + static_cast<std::ptrdiff_t>(j), std::size_t{0});
}

bool CoarseMap::is_identity() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](std::size_t b) { return b == 1; });
}

CoarseMap CoarseMap::compose(const CoarseMap& first, const CoarseMap& second) {
  if (first.codomain_size() != second.domain_size()) {
    throw InvalidArgument("coarse maps are not composable");
  }
  std::vector<std::size_t> blocks;
  std::size_t cursor = 0;
  for (std::size_t b : second.blocks_) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < b; ++i) total += first.blocks_[cursor++];
    blocks.push_back(total);
  }
  return CoarseMap(std::move(blocks));
}

std::string CoarseMap::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(blocks_[i]);
  }
  return out;
}

}  // namespace orbent
