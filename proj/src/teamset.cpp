#include "ifg/teamset.hpp"

#include "ifg/error.hpp"

namespace ifg {

TeamSet::TeamSet(std::uint32_t valuations) : m_(valuations) {
  if (valuations > kMaxEnumeratedValuations)
    throw GuardError("team-sets need |A|^N <= " + std::to_string(kMaxEnumeratedValuations) + ", got " +
                     std::to_string(valuations));
  if (valuations > 6) big_.assign(std::size_t{1} << (valuations - 6), 0);
}

TeamSet TeamSet::powerset_of(std::uint32_t valuations, Team V) {
  TeamSet s(valuations);
  Team sub = V;
  while (true) {
    s.insert(sub);
    if (sub == 0) break;
    sub = (sub - 1) & V;
  }
  return s;
}

TeamSet TeamSet::only_empty(std::uint32_t valuations) {
  TeamSet s(valuations);
  s.insert(0);
  return s;
}

std::size_t TeamSet::count() const {
  std::size_t c = 0;
  for (std::size_t w = 0; w < nwords(); ++w) c += static_cast<std::size_t>(std::popcount(word(w)));
  return c;
}

bool TeamSet::none() const {
  for (std::size_t w = 0; w < nwords(); ++w)
    if (word(w)) return false;
  return true;
}

bool TeamSet::subset_of(const TeamSet& o) const {
  for (std::size_t w = 0; w < nwords(); ++w)
    if (word(w) & ~o.word(w)) return false;
  return true;
}

Team TeamSet::support() const {
  Team u = 0;
  for_each([&](Team V) { u |= V; });
  return u;
}

bool TeamSet::downward_closed() const {
  bool ok = true;
  for_each([&](Team V) {
    for (Team t = V; t && ok; t &= t - 1)
      if (!contains(V & ~(t & (~t + 1)))) ok = false;
  });
  return ok;
}

std::vector<Team> TeamSet::members() const {
  std::vector<Team> out;
  for_each([&](Team V) { out.push_back(V); });
  return out;
}

std::uint64_t TeamSet::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ m_;
  for (std::size_t w = 0; w < nwords(); ++w) {
    h ^= word(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

TeamSet TeamSet::operator|(const TeamSet& o) const {
  TeamSet r = *this;
  for (std::size_t w = 0; w < nwords(); ++w) r.mut_word(w) |= o.word(w);
  return r;
}

TeamSet TeamSet::operator&(const TeamSet& o) const {
  TeamSet r = *this;
  for (std::size_t w = 0; w < nwords(); ++w) r.mut_word(w) &= o.word(w);
  return r;
}

TeamSet TeamSet::operator-(const TeamSet& o) const {
  TeamSet r = *this;
  for (std::size_t w = 0; w < nwords(); ++w) r.mut_word(w) &= ~o.word(w);
  return r;
}

bool TeamSet::operator==(const TeamSet& o) const {
  if (m_ != o.m_) return false;
  for (std::size_t w = 0; w < nwords(); ++w)
    if (word(w) != o.word(w)) return false;
  return true;
}

std::string render_teamset(const Space& sp, const TeamSet& s) {
  std::string out;
  bool first = true;
  s.for_each([&](Team V) {
    if (!first) out += ',';
    out += sp.team_to_string(V);
    first = false;
  });
  return out;
}

}  // namespace ifg
