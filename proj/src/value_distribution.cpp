#include "value_distribution.hpp"

namespace niho3 {

void ValueDistribution::add(int64_t value, const BigInt& count) {
  if (count == 0) return;
  if (count < 0) fail(Status::invalid_argument, "negative multiset count");
  entries_[value] += count;
}

void ValueDistribution::merge(const ValueDistribution& other) {
  for (const auto& [value, count] : other.entries_) entries_[value] += count;
}

void ValueDistribution::remove(int64_t value, const BigInt& count) {
  auto it = entries_.find(value);
  if (it == entries_.end() || it->second < count) {
    fail(Status::invalid_argument,
         "cannot remove " + count.get_str() + " occurrences of " +
             std::to_string(value));
  }
  it->second -= count;
  if (it->second == 0) entries_.erase(it);
}

BigInt ValueDistribution::total() const {
  BigInt t = 0;
  for (const auto& [value, count] : entries_) t += count;
  return t;
}

BigInt ValueDistribution::count_of(int64_t value) const {
  auto it = entries_.find(value);
  return it == entries_.end() ? BigInt(0) : it->second;
}

ValueDistribution ValueDistribution::scaled(const BigInt& factor) const {
  ValueDistribution out;
  for (const auto& [value, count] : entries_) out.add(value, count * factor);
  return out;
}

ValueDistribution ValueDistribution::divided(const BigInt& divisor) const {
  ValueDistribution out;
  for (const auto& [value, count] : entries_) {
    out.add(value, exact_div(count, divisor, Status::non_integral_result,
                             "multiset count for value " +
                                 std::to_string(value)));
  }
  return out;
}

BigInt ValueDistribution::moment(int r) const {
  BigInt acc = 0;
  for (const auto& [value, count] : entries_) {
    BigInt v = value;
    acc += bigint_pow(v, static_cast<unsigned long>(r)) * count;
  }
  return acc;
}

nlohmann::ordered_json ValueDistribution::to_json() const {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [value, count] : entries_) {
    out[std::to_string(value)] = count.get_str();
  }
  return out;
}

}  // namespace niho3
