#include "hallverdict/prime_set.hpp"

#include <algorithm>
#include <sstream>

namespace hallverdict {

PrimeSet::PrimeSet(bool finite, std::vector<Natural> listed)
    : finite_(finite), listed_(std::move(listed)) {
  std::sort(listed_.begin(), listed_.end());
  listed_.erase(std::unique(listed_.begin(), listed_.end()), listed_.end());
  for (const auto& p : listed_)
    if (!arith::is_prime(p))
      throw InvalidInputError("PrimeSet: " + p.str() + " is not prime");
}

PrimeSet PrimeSet::finite(std::vector<Natural> primes) {
  return PrimeSet(true, std::move(primes));
}

PrimeSet PrimeSet::cofinite(std::vector<Natural> excluded) {
  return PrimeSet(false, std::move(excluded));
}

bool PrimeSet::contains(const Natural& p) const {
  bool in_list = std::binary_search(listed_.begin(), listed_.end(), p);
  return finite_ ? in_list : !in_list;
}

std::vector<Natural> PrimeSet::intersect(
    const std::vector<Natural>& primes) const {
  std::vector<Natural> out;
  for (const auto& p : primes)
    if (contains(p)) out.push_back(p);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string PrimeSet::to_string() const {
  std::ostringstream os;
  if (!finite_) os << "excluded:";
  for (std::size_t i = 0; i < listed_.size(); ++i) {
    if (i) os << ",";
    os << listed_[i].str();
  }
  return os.str();
}

PrimeSet PrimeSet::parse(const std::string& text) {
  std::string body = text;
  bool finite_form = true;
  const std::string prefix = "excluded:";
  if (body.rfind(prefix, 0) == 0) {
    finite_form = false;
    body = body.substr(prefix.size());
  }
  std::vector<Natural> primes;
  std::string tok;
  std::istringstream is(body);
  while (std::getline(is, tok, ',')) {
    // trim spaces
    auto b = tok.find_first_not_of(" \t");
    auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    primes.push_back(arith::parse_natural(tok.substr(b, e - b + 1)));
  }
  return finite_form ? finite(std::move(primes)) : cofinite(std::move(primes));
}

}  // namespace hallverdict
