#include "electionpulse/actors.hpp"

#include "electionpulse/common.hpp"
#include "electionpulse/preprocess.hpp"

#include <algorithm>

namespace electionpulse::actors {

namespace {

std::vector<std::string> phrase_tokens(std::string_view alias) {
    return preprocess::tokenize(preprocess::clean(alias));
}

bool contains_phrase(std::span<const std::string> tokens, const std::vector<std::string>& phrase) {
    if (phrase.empty() || phrase.size() > tokens.size()) return false;
    auto it = std::search(tokens.begin(), tokens.end(), phrase.begin(), phrase.end());
    return it != tokens.end();
}

std::optional<ActorKind> parse_kind(std::string_view s) {
    if (s == "candidate") return ActorKind::kCandidate;
    if (s == "party") return ActorKind::kParty;
    if (s == "combined") return ActorKind::kCombined;
    return std::nullopt;
}

}  // namespace

std::string_view to_string(ActorKind kind) {
    switch (kind) {
    case ActorKind::kCandidate: return "candidate";
    case ActorKind::kParty: return "party";
    case ActorKind::kCombined: return "combined";
    }
    return "candidate";
}

std::vector<std::string> ActorSet::validate(const std::vector<Actor>& actors) {
    std::vector<std::string> errors;
    std::map<std::string, const Actor*, std::less<>> by_id;
    for (const auto& a : actors) {
        if (a.id.empty()) {
            errors.emplace_back("actor with empty id");
            continue;
        }
        if (!by_id.emplace(a.id, &a).second) errors.push_back("duplicate actor id '" + a.id + "'");
    }

    std::map<std::pair<ActorKind, std::string>, std::string> alias_owner;
    for (const auto& a : actors) {
        if (a.kind != ActorKind::kCombined && a.aliases.empty())
            errors.push_back("actor '" + a.id + "' has no aliases");
        for (const auto& alias : a.aliases) {
            if (alias != preprocess::to_lower(alias))
                errors.push_back("actor '" + a.id + "' alias '" + alias + "' is not lowercase");
            if (phrase_tokens(alias).empty())
                errors.push_back("actor '" + a.id + "' alias '" + alias + "' has no matchable words");
            auto [it, inserted] = alias_owner.emplace(std::pair{a.kind, alias}, a.id);
            if (!inserted && it->second != a.id)
                errors.push_back("alias '" + alias + "' shared by " + std::string(to_string(a.kind)) +
                                 "s '" + it->second + "' and '" + a.id + "'");
        }
        if (a.kind == ActorKind::kCombined) {
            if (!a.components) {
                errors.push_back("combined actor '" + a.id + "' has no components");
                continue;
            }
            const auto& [cand, party] = *a.components;
            auto c = by_id.find(cand);
            if (c == by_id.end())
                errors.push_back("combined actor '" + a.id + "' references missing candidate '" + cand + "'");
            else if (c->second->kind != ActorKind::kCandidate)
                errors.push_back("combined actor '" + a.id + "' component '" + cand + "' is not a candidate");
            auto p = by_id.find(party);
            if (p == by_id.end())
                errors.push_back("combined actor '" + a.id + "' references missing party '" + party + "'");
            else if (p->second->kind != ActorKind::kParty)
                errors.push_back("combined actor '" + a.id + "' component '" + party + "' is not a party");
        } else if (a.components) {
            errors.push_back("actor '" + a.id + "' has components but is not combined");
        }
    }
    return errors;
}

ActorSet ActorSet::from_actors(std::vector<Actor> actors) {
    if (auto errors = validate(actors); !errors.empty()) {
        std::string msg;
        for (const auto& e : errors) msg += (msg.empty() ? "" : "\n") + e;
        throw ConfigError(msg);
    }
    ActorSet set;
    set.actors_ = std::move(actors);
    for (const auto& a : set.actors_) {
        std::vector<std::vector<std::string>> phrases;
        for (const auto& alias : a.aliases) phrases.push_back(phrase_tokens(alias));
        set.phrases_.push_back(std::move(phrases));
    }
    return set;
}

std::vector<Actor> ActorSet::parse_document(const ini::Document& doc,
                                            std::vector<std::string>& diagnostics) {
    std::vector<Actor> actors;
    for (const auto& section : doc.sections()) {
        const auto where = doc.source() + ":" + std::to_string(section.line) + ": ";
        if (!section.name.starts_with("actor ")) {
            diagnostics.push_back(where + "unexpected section [" + section.name + "]");
            continue;
        }
        Actor a;
        a.id = std::string(ini::trim(std::string_view(section.name).substr(6)));
        const auto* kind = section.find("kind");
        if (!kind) {
            diagnostics.push_back(where + "actor '" + a.id + "' missing 'kind'");
            continue;
        }
        auto parsed = parse_kind(kind->value);
        if (!parsed) {
            diagnostics.push_back(where + "actor '" + a.id + "' has unknown kind '" + kind->value + "'");
            continue;
        }
        a.kind = *parsed;
        if (const auto* aliases = section.find("aliases"))
            a.aliases = ini::split_list(aliases->value);
        if (const auto* comps = section.find("components")) {
            auto parts = ini::split_list(comps->value);
            if (parts.size() != 2) {
                diagnostics.push_back(where + "actor '" + a.id + "' components must be 'candidate, party'");
                continue;
            }
            a.components = std::pair{parts[0], parts[1]};
        }
        actors.push_back(std::move(a));
    }
    return actors;
}

ActorSet ActorSet::from_document(const ini::Document& doc) {
    std::vector<std::string> diagnostics;
    auto actors = parse_document(doc, diagnostics);
    auto more = validate(actors);
    diagnostics.insert(diagnostics.end(), more.begin(), more.end());
    if (!diagnostics.empty()) {
        std::string msg;
        for (const auto& e : diagnostics) msg += (msg.empty() ? "" : "\n") + e;
        throw ConfigError(msg);
    }
    return from_actors(std::move(actors));
}

ActorSet ActorSet::load(const std::filesystem::path& path) {
    return from_document(ini::Document::load(path));
}

const Actor* ActorSet::find(std::string_view id) const {
    for (const auto& a : actors_)
        if (a.id == id) return &a;
    return nullptr;
}

IdSet ActorSet::match(std::span<const std::string> surface) const {
    IdSet matched;
    for (std::size_t i = 0; i < actors_.size(); ++i) {
        if (actors_[i].kind == ActorKind::kCombined) continue;
        for (const auto& phrase : phrases_[i]) {
            if (contains_phrase(surface, phrase)) {
                matched.insert(actors_[i].id);
                break;
            }
        }
    }
    for (const auto& a : actors_) {
        if (a.kind != ActorKind::kCombined) continue;
        if (matched.contains(a.components->first) && matched.contains(a.components->second))
            matched.insert(a.id);
    }
    return matched;
}

std::set<std::string, std::less<>> ActorSet::alias_words() const {
    std::set<std::string, std::less<>> words;
    for (const auto& phrases : phrases_)
        for (const auto& phrase : phrases) words.insert(phrase.begin(), phrase.end());
    return words;
}

IdSet match_actors(const ProcessedTweet& tweet, const ActorSet& actors) {
    return actors.match(tweet.surface);
}

IdSet match_text(std::string_view raw_text, const ActorSet& actors) {
    return actors.match(preprocess::tokenize(preprocess::clean(raw_text)));
}

MentionMatrix build_mentions(std::span<const ProcessedTweet> tweets, const ActorSet& actors) {
    MentionMatrix m;
    m.reserve(tweets.size());
    for (const auto& t : tweets) m.push_back({t.record_id, match_actors(t, actors)});
    return m;
}

std::optional<std::string> sole_mention(const IdSet& matched, const ActorSet& actors,
                                        const IdSet& scope) {
    IdSet in_scope;
    for (const auto& id : matched)
        if (scope.contains(id)) in_scope.insert(id);
    // a combined actor and its own components are one identity
    for (const auto& id : IdSet(in_scope)) {
        const auto* a = actors.find(id);
        if (a && a->kind == ActorKind::kCombined) {
            in_scope.erase(a->components->first);
            in_scope.erase(a->components->second);
        }
    }
    if (in_scope.size() != 1) return std::nullopt;
    return *in_scope.begin();
}

std::map<std::string, std::size_t> group_counts(const MentionMatrix& matrix, const ActorSet& actors) {
    std::map<std::string, std::size_t> counts;
    for (const auto& a : actors.actors()) counts[a.id] = 0;
    for (const auto& row : matrix)
        for (const auto& id : row.actors)
            if (auto it = counts.find(id); it != counts.end()) ++it->second;
    return counts;
}

}  // namespace electionpulse::actors
