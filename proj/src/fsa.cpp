#include "ede/fsa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "ede/errors.hpp"
#include "text_util.hpp"

namespace ede {

Automaton::Automaton(Alphabet alphabet, std::vector<State> transitions, std::vector<bool> finals,
                     std::vector<std::string> labels, State initial)
    : alphabet_(std::move(alphabet)),
      delta_(std::move(transitions)),
      finals_(std::move(finals)),
      labels_(std::move(labels)),
      initial_(initial) {
  const auto n = finals_.size();
  if (n == 0) throw StructuralError("automaton needs at least one state");
  if (labels_.size() != n) throw StructuralError("automaton label count mismatch");
  if (delta_.size() != n * alphabet_.size()) {
    throw StructuralError("transition table is not total");
  }
  if (initial_ >= n) throw StructuralError("initial state out of range");
  for (auto s : delta_) {
    if (s >= n) throw StructuralError("transition target out of range");
  }
}

Automaton Automaton::empty_language(const Alphabet& alphabet) {
  return Automaton(alphabet, std::vector<State>(alphabet.size(), 0), {false}, {"empty"}, 0);
}

Automaton Automaton::all_words(const Alphabet& alphabet) {
  return Automaton(alphabet, std::vector<State>(alphabet.size(), 0), {true}, {"all"}, 0);
}

Automaton::State Automaton::run(const DigitWord& u) const {
  State s = initial_;
  for (const auto& x : u.letters) s = next(s, alphabet_.index_of(x));
  return s;
}

bool accepts(const Automaton& a, const DigitWord& u) { return a.is_final(a.run(u)); }

namespace {

void require_same_alphabet(const Automaton& a, const Automaton& b) {
  if (!(a.alphabet() == b.alphabet())) {
    throw AlphabetError("automata over different alphabets");
  }
}

template <class Combine>
Automaton product(const Automaton& a, const Automaton& b, std::size_t state_cap, Combine combine) {
  require_same_alphabet(a, b);
  using State = Automaton::State;
  const auto k = a.alphabet().size();
  std::unordered_map<std::uint64_t, State> index;
  std::vector<std::pair<State, State>> pairs;
  std::vector<State> delta;
  auto intern = [&](State x, State y) {
    const auto key = (std::uint64_t{x} << 32) | y;
    const auto [it, fresh] = index.emplace(key, static_cast<State>(pairs.size()));
    if (fresh) {
      if (pairs.size() >= state_cap) {
        throw CapacityError("product automaton exceeds state cap " + std::to_string(state_cap),
                            pairs.size());
      }
      pairs.emplace_back(x, y);
    }
    return it->second;
  };
  intern(a.initial(), b.initial());
  for (std::size_t s = 0; s < pairs.size(); ++s) {
    for (std::size_t x = 0; x < k; ++x) {
      const auto [sa, sb] = pairs[s];
      delta.push_back(intern(a.next(sa, x), b.next(sb, x)));
    }
  }
  std::vector<bool> finals;
  std::vector<std::string> labels;
  for (const auto& [sa, sb] : pairs) {
    finals.push_back(combine(a.is_final(sa), b.is_final(sb)));
    labels.push_back("(" + std::to_string(sa) + "," + std::to_string(sb) + ")");
  }
  return Automaton(a.alphabet(), std::move(delta), std::move(finals), std::move(labels), 0);
}

}  // namespace

Automaton intersect(const Automaton& a, const Automaton& b, std::size_t state_cap) {
  return product(a, b, state_cap, [](bool x, bool y) { return x && y; });
}

Automaton unite(const Automaton& a, const Automaton& b, std::size_t state_cap) {
  return product(a, b, state_cap, [](bool x, bool y) { return x || y; });
}

Automaton prepend_letter(const Automaton& a, const DigitLetter& x) {
  using State = Automaton::State;
  const auto& sigma = a.alphabet();
  const auto xi = sigma.index_of(x);
  const auto k = sigma.size();
  const auto n = a.num_states();
  // State 0 is the fresh start, state 1 the sink, a's states follow.
  std::vector<State> delta((n + 2) * k);
  for (std::size_t y = 0; y < k; ++y) {
    delta[y] = y == xi ? a.initial() + 2 : 1;
    delta[k + y] = 1;
  }
  std::vector<bool> finals{false, false};
  std::vector<std::string> labels{"start", "sink"};
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t y = 0; y < k; ++y) {
      delta[(s + 2) * k + y] = a.next(static_cast<State>(s), y) + 2;
    }
    finals.push_back(a.is_final(static_cast<State>(s)));
    labels.push_back(a.label(static_cast<State>(s)));
  }
  return trim_unreachable(Automaton(sigma, std::move(delta), std::move(finals), std::move(labels), 0));
}

Automaton with_empty_word(const Automaton& a, bool accept) {
  using State = Automaton::State;
  if (a.is_final(a.initial()) == accept) return a;
  const auto k = a.alphabet().size();
  const auto n = a.num_states();
  std::vector<State> delta;
  std::vector<bool> finals;
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t y = 0; y < k; ++y) delta.push_back(a.next(static_cast<State>(s), y));
    finals.push_back(a.is_final(static_cast<State>(s)));
    labels.push_back(a.label(static_cast<State>(s)));
  }
  // A copy of the start state that differs only in finality.
  for (std::size_t y = 0; y < k; ++y) delta.push_back(a.next(a.initial(), y));
  finals.push_back(accept);
  labels.push_back("start " + a.label(a.initial()));
  return trim_unreachable(Automaton(a.alphabet(), std::move(delta), std::move(finals),
                                    std::move(labels), static_cast<State>(n)));
}

Automaton complement(const Automaton& a) {
  using State = Automaton::State;
  const auto k = a.alphabet().size();
  std::vector<State> delta;
  std::vector<bool> finals;
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < a.num_states(); ++s) {
    for (std::size_t y = 0; y < k; ++y) delta.push_back(a.next(static_cast<State>(s), y));
    finals.push_back(!a.is_final(static_cast<State>(s)));
    labels.push_back(a.label(static_cast<State>(s)));
  }
  return Automaton(a.alphabet(), std::move(delta), std::move(finals), std::move(labels),
                   a.initial());
}

Automaton trim_unreachable(const Automaton& a) {
  using State = Automaton::State;
  const auto k = a.alphabet().size();
  constexpr State kUnseen = ~State{0};
  std::vector<State> renumber(a.num_states(), kUnseen);
  std::vector<State> order{a.initial()};
  renumber[a.initial()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t y = 0; y < k; ++y) {
      const auto t = a.next(order[i], y);
      if (renumber[t] == kUnseen) {
        renumber[t] = static_cast<State>(order.size());
        order.push_back(t);
      }
    }
  }
  std::vector<State> delta;
  std::vector<bool> finals;
  std::vector<std::string> labels;
  for (auto s : order) {
    for (std::size_t y = 0; y < k; ++y) delta.push_back(renumber[a.next(s, y)]);
    finals.push_back(a.is_final(s));
    labels.push_back(a.label(s));
  }
  return Automaton(a.alphabet(), std::move(delta), std::move(finals), std::move(labels), 0);
}

Automaton minimize(const Automaton& input) {
  using State = Automaton::State;
  const Automaton a = trim_unreachable(input);
  const auto n = a.num_states();
  const auto k = a.alphabet().size();
  std::vector<State> cls(n);
  for (std::size_t s = 0; s < n; ++s) cls[s] = a.is_final(static_cast<State>(s)) ? 1 : 0;
  std::size_t num_classes = 0;
  while (true) {
    std::map<std::vector<State>, State> signatures;
    std::vector<State> next_cls(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<State> sig{cls[s]};
      for (std::size_t y = 0; y < k; ++y) sig.push_back(cls[a.next(static_cast<State>(s), y)]);
      const auto [it, fresh] = signatures.emplace(std::move(sig), static_cast<State>(signatures.size()));
      next_cls[s] = it->second;
    }
    cls = std::move(next_cls);
    if (signatures.size() == num_classes) break;
    num_classes = signatures.size();
  }
  std::vector<State> representative(num_classes, ~State{0});
  for (std::size_t s = 0; s < n; ++s) {
    if (representative[cls[s]] == ~State{0}) representative[cls[s]] = static_cast<State>(s);
  }
  std::vector<State> delta;
  std::vector<bool> finals;
  std::vector<std::string> labels;
  for (auto rep : representative) {
    for (std::size_t y = 0; y < k; ++y) delta.push_back(cls[a.next(rep, y)]);
    finals.push_back(a.is_final(rep));
    labels.push_back(a.label(rep));
  }
  return trim_unreachable(Automaton(a.alphabet(), std::move(delta), std::move(finals),
                                    std::move(labels), cls[a.initial()]));
}

namespace {

// States from which some final state is reachable.
std::vector<bool> live_states(const Automaton& a) {
  const auto n = a.num_states();
  const auto k = a.alphabet().size();
  std::vector<std::vector<Automaton::State>> reverse(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t y = 0; y < k; ++y) {
      reverse[a.next(static_cast<Automaton::State>(s), y)].push_back(static_cast<Automaton::State>(s));
    }
  }
  std::vector<bool> live(n, false);
  std::vector<Automaton::State> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (a.is_final(static_cast<Automaton::State>(s))) {
      live[s] = true;
      stack.push_back(static_cast<Automaton::State>(s));
    }
  }
  while (!stack.empty()) {
    const auto s = stack.back();
    stack.pop_back();
    for (auto r : reverse[s]) {
      if (!live[r]) {
        live[r] = true;
        stack.push_back(r);
      }
    }
  }
  return live;
}

}  // namespace

bool is_empty(const Automaton& a) { return !live_states(a)[a.initial()]; }

std::vector<DigitWord> enumerate(const Automaton& a, std::size_t max_len) {
  const auto live = live_states(a);
  const auto& sigma = a.alphabet();
  std::vector<DigitLetter> letters;
  for (std::size_t y = 0; y < sigma.size(); ++y) letters.push_back(sigma.letter(y));
  std::vector<DigitWord> out;
  std::vector<std::pair<DigitWord, Automaton::State>> level;
  if (live[a.initial()]) level.emplace_back(DigitWord{}, a.initial());
  for (std::size_t len = 0; !level.empty(); ++len) {
    for (const auto& [u, s] : level) {
      if (a.is_final(s)) out.push_back(u);
    }
    if (len == max_len) break;
    std::vector<std::pair<DigitWord, Automaton::State>> next_level;
    for (const auto& [u, s] : level) {
      for (std::size_t y = 0; y < sigma.size(); ++y) {
        const auto t = a.next(s, y);
        if (!live[t]) continue;
        DigitWord w = u;
        w.letters.push_back(letters[y]);
        next_level.emplace_back(std::move(w), t);
      }
    }
    level = std::move(next_level);
  }
  return out;
}

bool same_language_up_to(const Automaton& a, const Automaton& b, std::size_t max_len) {
  require_same_alphabet(a, b);
  const auto k = a.alphabet().size();
  std::unordered_map<std::uint64_t, std::size_t> depth;
  std::deque<std::pair<Automaton::State, Automaton::State>> queue;
  auto key = [](Automaton::State x, Automaton::State y) { return (std::uint64_t{x} << 32) | y; };
  depth[key(a.initial(), b.initial())] = 0;
  queue.emplace_back(a.initial(), b.initial());
  while (!queue.empty()) {
    const auto [x, y] = queue.front();
    queue.pop_front();
    if (a.is_final(x) != b.is_final(y)) return false;
    const auto d = depth[key(x, y)];
    if (d == max_len) continue;
    for (std::size_t l = 0; l < k; ++l) {
      const auto nx = a.next(x, l);
      const auto ny = b.next(y, l);
      if (depth.emplace(key(nx, ny), d + 1).second) queue.emplace_back(nx, ny);
    }
  }
  return true;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out;
}

std::string dot_unescape(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size()) {
      ++i;
      out += s[i] == 'n' ? '\n' : s[i];
    } else {
      out += s[i];
    }
  }
  return out;
}

// Value of attribute `name="..."` inside a DOT attribute list.
std::string dot_attribute(std::string_view line, std::string_view name) {
  const auto key = std::string(name) + "=\"";
  auto pos = line.find(key);
  if (pos == std::string_view::npos) throw ParseError("DOT line lacks " + std::string(name) + ": " + std::string(line));
  pos += key.size();
  std::size_t end = pos;
  while (end < line.size() && line[end] != '"') end += line[end] == '\\' ? 2 : 1;
  if (end >= line.size()) throw ParseError("unterminated DOT attribute");
  return dot_unescape(line.substr(pos, end - pos));
}

}  // namespace

std::string to_dot(const Automaton& a) {
  const auto& sigma = a.alphabet();
  std::ostringstream out;
  out << "digraph automaton {\n";
  out << "  rankdir=LR;\n";
  out << "  digits_p=" << sigma.p() << ";\n";
  out << "  digits_t=" << sigma.width() << ";\n";
  out << "  __start [shape=point];\n";
  out << "  __start -> " << a.initial() << ";\n";
  for (std::size_t s = 0; s < a.num_states(); ++s) {
    const auto st = static_cast<Automaton::State>(s);
    out << "  " << s << " [shape=" << (a.is_final(st) ? "doublecircle" : "circle")
        << ", tooltip=\"" << dot_escape(a.label(st)) << "\"];\n";
  }
  for (std::size_t s = 0; s < a.num_states(); ++s) {
    std::map<Automaton::State, std::string> grouped;
    for (std::size_t y = 0; y < sigma.size(); ++y) {
      auto& label = grouped[a.next(static_cast<Automaton::State>(s), y)];
      if (!label.empty()) label += ' ';
      label += "(" + format_letter(sigma.letter(y)) + ")";
    }
    for (const auto& [t, label] : grouped) {
      out << "  " << s << " -> " << t << " [label=\"" << label << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

Automaton from_dot(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::int64_t p = -1, t = -1, initial = -1;
  std::map<std::size_t, std::pair<bool, std::string>> nodes;
  std::vector<std::tuple<std::size_t, DigitLetter, std::size_t>> edges;
  while (std::getline(in, raw)) {
    const auto line = detail::trim(raw);
    if (line.empty() || line == "}" || line.starts_with("digraph") || line.starts_with("rankdir")) continue;
    if (line.starts_with("digits_p=")) {
      p = static_cast<std::int64_t>(detail::parse_unsigned(line.substr(9, line.size() - 10), "base"));
    } else if (line.starts_with("digits_t=")) {
      t = static_cast<std::int64_t>(detail::parse_unsigned(line.substr(9, line.size() - 10), "width"));
    } else if (line.starts_with("__start [")) {
      continue;
    } else if (line.starts_with("__start ->")) {
      initial = static_cast<std::int64_t>(detail::parse_unsigned(line.substr(10, line.size() - 11), "initial state"));
    } else if (const auto arrow = line.find(" -> ");
               arrow != std::string_view::npos && arrow < line.find('[')) {
      const auto from = detail::parse_unsigned(line.substr(0, arrow), "state id");
      const auto bracket = line.find(" [", arrow);
      if (bracket == std::string_view::npos) throw ParseError("DOT edge lacks attributes");
      const auto to = detail::parse_unsigned(line.substr(arrow + 4, bracket - arrow - 4), "state id");
      const auto label = dot_attribute(line, "label");
      std::size_t pos = 0;
      while ((pos = label.find('(', pos)) != std::string::npos) {
        const auto close = label.find(')', pos);
        if (close == std::string::npos) throw ParseError("unbalanced DOT edge label");
        edges.emplace_back(from, parse_letter(std::string_view(label).substr(pos + 1, close - pos - 1)), to);
        pos = close + 1;
      }
    } else if (const auto bracket = line.find(" ["); bracket != std::string_view::npos) {
      const auto id = detail::parse_unsigned(line.substr(0, bracket), "state id");
      nodes[id] = {line.find("shape=doublecircle") != std::string_view::npos,
                   dot_attribute(line, "tooltip")};
    } else {
      throw ParseError("unrecognized DOT line: " + std::string(line));
    }
  }
  if (p < 0 || t < 0 || initial < 0) throw ParseError("DOT text lacks digits_p, digits_t or start edge");
  Alphabet sigma(static_cast<std::uint32_t>(p), static_cast<std::size_t>(t));
  const auto n = nodes.size();
  std::vector<bool> finals(n);
  std::vector<std::string> labels(n);
  for (const auto& [id, node] : nodes) {
    if (id >= n) throw ParseError("DOT state ids are not contiguous");
    finals[id] = node.first;
    labels[id] = node.second;
  }
  constexpr auto kMissing = ~Automaton::State{0};
  std::vector<Automaton::State> delta(n * sigma.size(), kMissing);
  for (const auto& [from, x, to] : edges) {
    if (from >= n || to >= n) throw ParseError("DOT edge references unknown state");
    delta[from * sigma.size() + sigma.index_of(x)] = static_cast<Automaton::State>(to);
  }
  if (std::find(delta.begin(), delta.end(), kMissing) != delta.end()) {
    throw ParseError("DOT transitions are not total");
  }
  return Automaton(sigma, std::move(delta), std::move(finals), std::move(labels),
                   static_cast<Automaton::State>(initial));
}

std::string to_json(const Automaton& a) {
  using nlohmann::ordered_json;
  const auto& sigma = a.alphabet();
  ordered_json doc;
  doc["p"] = sigma.p();
  doc["t"] = sigma.width();
  ordered_json states = ordered_json::array();
  for (std::size_t s = 0; s < a.num_states(); ++s) {
    ordered_json st;
    st["id"] = s;
    st["final"] = a.is_final(static_cast<Automaton::State>(s));
    st["label"] = a.label(static_cast<Automaton::State>(s));
    states.push_back(std::move(st));
  }
  doc["states"] = std::move(states);
  doc["initial"] = a.initial();
  ordered_json transitions = ordered_json::array();
  for (std::size_t s = 0; s < a.num_states(); ++s) {
    for (std::size_t y = 0; y < sigma.size(); ++y) {
      ordered_json tr;
      tr["from"] = s;
      tr["letter"] = sigma.letter(y).digits;
      tr["to"] = a.next(static_cast<Automaton::State>(s), y);
      transitions.push_back(std::move(tr));
    }
  }
  doc["transitions"] = std::move(transitions);
  return doc.dump(1) + "\n";
}

Automaton from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
    Alphabet sigma(doc.at("p").get<std::uint32_t>(), doc.at("t").get<std::size_t>());
    const auto& states = doc.at("states");
    const auto n = states.size();
    std::vector<bool> finals(n);
    std::vector<std::string> labels(n);
    std::vector<bool> seen(n, false);
    for (const auto& st : states) {
      const auto id = st.at("id").get<std::size_t>();
      if (id >= n || seen[id]) throw ParseError("automaton JSON state ids are not a permutation");
      seen[id] = true;
      finals[id] = st.at("final").get<bool>();
      labels[id] = st.value("label", std::string{});
    }
    constexpr auto kMissing = ~Automaton::State{0};
    std::vector<Automaton::State> delta(n * sigma.size(), kMissing);
    for (const auto& tr : doc.at("transitions")) {
      const auto from = tr.at("from").get<std::size_t>();
      const auto to = tr.at("to").get<std::size_t>();
      if (from >= n || to >= n) throw ParseError("automaton JSON transition references unknown state");
      DigitLetter x{tr.at("letter").get<std::vector<std::uint32_t>>()};
      delta[from * sigma.size() + sigma.index_of(x)] = static_cast<Automaton::State>(to);
    }
    if (std::find(delta.begin(), delta.end(), kMissing) != delta.end()) {
      throw ParseError("automaton JSON transitions are not total");
    }
    return Automaton(sigma, std::move(delta), std::move(finals), std::move(labels),
                     doc.at("initial").get<Automaton::State>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("automaton JSON: ") + e.what());
  }
}

}  // namespace ede
