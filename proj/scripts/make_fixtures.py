#!/usr/bin/env python3
"""Regenerates the shipped fixtures under data/fixture and tests/data.

Needs textblob (for its bundled lexicon and word counts) and nltk (Porter
reference outputs). Output is deterministic.
"""
import csv
import json
import pathlib
import random
import xml.etree.ElementTree as ET

import nltk.stem.porter as porter
import textblob

ROOT = pathlib.Path(__file__).resolve().parent.parent
FIX = ROOT / "data" / "fixture"
TDATA = ROOT / "tests" / "data"
TB = pathlib.Path(textblob.__file__).parent / "en"

STOPWORDS = """i me my myself we our ours ourselves you you're you've you'll you'd your yours
yourself yourselves he him his himself she she's her hers herself it it's its itself they them
their theirs themselves what which who whom this that that'll these those am is are was were be
been being have has had having do does did doing a an the and but if or because as until while of
at by for with about against between into through during before after above below to from up
down in out on off over under again further then once here there when where why how all any both
each few more most other some such no nor not only own same so than too very s t can will just
don don't should should've now d ll m o re ve y ain aren aren't couldn couldn't didn didn't doesn
doesn't hadn hadn't hasn hasn't haven haven't isn isn't ma mightn mightn't mustn mustn't needn
needn't shan shan't shouldn shouldn't wasn wasn't weren weren't won won't wouldn wouldn't""".split()

NEGATORS = """not no never nor none nobody nothing neither nowhere cannot can't don't doesn't didn't
isn't wasn't aren't weren't won't wouldn't shouldn't couldn't haven't hasn't hadn't ain't""".split()

DOMAIN_WORDS = {
    "inec": 400, "awka": 300, "anambra": 900, "onitsha": 250, "nnewi": 120, "ekwulobia": 60,
    "apga": 500, "apc": 450, "pdp": 450, "upp": 200, "ppa": 150, "obiano": 500, "nwoye": 350,
    "obaze": 300, "oseloka": 200, "chidoka": 250, "osita": 150, "ezeemo": 120, "godwin": 80,
    "willie": 200, "tony": 150, "gubernatorial": 120, "polling": 300, "electorate": 90,
    "thugs": 60, "rigging": 80, "ballot": 200, "ballots": 150, "voters": 400, "accreditation": 90,
    "collation": 60, "turnout": 120, "card": 300, "cards": 200, "pvc": 120, "ward": 150,
}


def pattern_lexicon():
    tree = ET.parse(TB / "en-sentiment.xml")
    rows = []
    for w in tree.getroot().iter("word"):
        form = w.get("form", "").strip().lower()
        if not form or not form.isascii() or not all(c.isalpha() or c in "'-" for c in form):
            continue
        rows.append((form, float(w.get("polarity")), float(w.get("subjectivity"))))
    rows.sort(key=lambda r: r[0])  # stable: keeps per-sense order within a lemma
    with open(FIX / "pattern_lexicon.csv", "w", newline="") as f:
        out = csv.writer(f, lineterminator="\n")
        out.writerow(["lemma", "polarity", "subjectivity"])
        for form, p, s in rows:
            out.writerow([form, repr(p), repr(s)])
    return len(rows)


def dictionary():
    counts = {}
    for line in (TB / "en-spelling.txt").read_text().splitlines():
        if line.startswith(";;;") or not line.strip():
            continue
        word, n = line.split()
        if word.isalpha() and word.islower():
            counts[word] = int(n)
    for w, n in DOMAIN_WORDS.items():
        counts[w] = max(counts.get(w, 0), n)
    with open(FIX / "dictionary.tsv", "w") as f:
        for w in sorted(counts):
            f.write(f"{w}\t{counts[w]}\n")
    return len(counts)


# lemma -> list of (pos, pos_score, neg_score) per sense rank
SENSES = {
    "good": [("a", 0.75, 0.0), ("a", 0.625, 0.0), ("n", 0.5, 0.0)],
    "bad": [("a", 0.0, 0.625), ("a", 0.0, 0.75), ("n", 0.0, 0.5)],
    "great": [("a", 0.25, 0.125), ("a", 0.75, 0.0)],
    "peaceful": [("a", 0.5, 0.0), ("a", 0.375, 0.0)],
    "violence": [("n", 0.0, 0.5), ("n", 0.0, 0.375)],
    "violent": [("a", 0.0, 0.625)],
    "win": [("v", 0.25, 0.0), ("n", 0.375, 0.0)],
    "lose": [("v", 0.0, 0.375), ("v", 0.0, 0.25)],
    "free": [("a", 0.375, 0.0), ("a", 0.25, 0.125)],
    "fair": [("a", 0.5, 0.0), ("a", 0.375, 0.125)],
    "credible": [("a", 0.5, 0.0)],
    "rig": [("v", 0.0, 0.5)],
    "fraud": [("n", 0.0, 0.625)],
    "happy": [("a", 0.875, 0.0), ("a", 0.5, 0.0)],
    "sad": [("a", 0.0, 0.75), ("a", 0.0, 0.5)],
    "angry": [("a", 0.0, 0.625)],
    "congratulations": [("n", 0.625, 0.0)],
    "hope": [("n", 0.375, 0.0), ("v", 0.25, 0.0)],
    "fear": [("n", 0.0, 0.5), ("v", 0.0, 0.375)],
    "delay": [("n", 0.0, 0.25), ("v", 0.0, 0.125)],
    "late": [("a", 0.0, 0.25), ("r", 0.0, 0.125)],
    "smooth": [("a", 0.375, 0.0)],
    "orderly": [("a", 0.375, 0.0)],
    "poor": [("a", 0.0, 0.625), ("a", 0.0, 0.5)],
    "low": [("a", 0.0, 0.25), ("a", 0.0, 0.375)],
    "strong": [("a", 0.375, 0.0)],
    "best": [("a", 0.75, 0.0), ("r", 0.5, 0.0)],
    "worst": [("a", 0.0, 0.75)],
    "failing": [("n", 0.0, 0.5), ("a", 0.0, 0.375)],
    "fail": [("v", 0.0, 0.5)],
    "vote": [("n", 0.0, 0.0), ("v", 0.0, 0.0)],
    "election": [("n", 0.0, 0.0)],
    "card": [("n", 0.0, 0.0)],
    "people": [("n", 0.0, 0.0)],
    "thank": [("v", 0.5, 0.0)],
    "calm": [("a", 0.5, 0.0), ("a", 0.25, 0.0)],
    "chaos": [("n", 0.0, 0.625)],
    "love": [("n", 0.625, 0.0), ("v", 0.5, 0.0)],
    "shame": [("n", 0.0, 0.625), ("v", 0.0, 0.5)],
}


def sense_lexicon():
    lines = ["# SentiWordNet 3.0 layout: POS ID PosScore NegScore SynsetTerms Gloss"]
    sid = 1000000
    for lemma in sorted(SENSES):
        for rank, (pos, p, n) in enumerate(SENSES[lemma], start=1):
            sid += 1
            lines.append(f"{pos}\t{sid:08d}\t{p:g}\t{n:g}\t{lemma}#{rank}\tsynthetic gloss")
    lines.append(f"a\t00904163\t0.75\t0\testimable#1\tdeserving of respect or high regard")
    lines.append(f"a\t00905386\t0\t0\testimable#3 computable#1\tmay be computed or estimated")
    (FIX / "sense_lexicon.txt").write_text("\n".join(lines) + "\n")


ACTORS = [
    ("obiano", "candidate", "obiano, willie obiano"),
    ("nwoye", "candidate", "nwoye, tony nwoye"),
    ("obaze", "candidate", "obaze, oseloka obaze, oseloka"),
    ("chidoka", "candidate", "chidoka, osita chidoka"),
    ("ezeemo", "candidate", "ezeemo, godwin ezeemo"),
    ("apga", "party", "apga"),
    ("apc", "party", "apc"),
    ("pdp", "party", "pdp"),
    ("upp", "party", "upp"),
    ("ppa", "party", "ppa"),
]
COMBINED = [("obiano_apga", "obiano", "apga"), ("nwoye_apc", "nwoye", "apc"),
            ("obaze_pdp", "obaze", "pdp"), ("chidoka_upp", "chidoka", "upp"),
            ("ezeemo_ppa", "ezeemo", "ppa")]


def actors_ini():
    out = ["# Candidates, parties and candidate+party pairs tracked in the fixture.", ""]
    for aid, kind, aliases in ACTORS:
        out += [f"[actor {aid}]", f"kind = {kind}", f"aliases = {aliases}", ""]
    for aid, cand, party in COMBINED:
        out += [f"[actor {aid}]", "kind = combined", f"components = {cand}, {party}", ""]
    (FIX / "actors.ini").write_text("\n".join(out))


TWEETS = [
    "Voting is peaceful at my polling unit in Awka. Obiano supporters everywhere #AnambraDecides",
    "INEC officials arrived late again, card readers not working &amp; voters angry https://t.co/x1",
    "@inecnigeria the accreditation in Onitsha is slow, we have been waiting since morning",
    "Tony Nwoye of APC is confident of a great win today #AnambraDecides2017",
    "Vote buying reported in Nnewi, shame on the PDP agents paying voters",
    "Obaze just cast his vote, PDP faithful happy 😀",
    "Osita Chidoka says UPP will not accept a rigged electoin",
    "Low turnout in many wards, people are not coming out to vote",
    "APGA has the best ground game in Anambra, Obiano will win this",
    "Card reader failing in Ekwulobia, this is bad for the process",
    "Peaceful and orderly voting so far, kudos to the security agencies",
    "Willie Obiano APGA landslide loading... congratulations in advance",
    "RT @channelstv: Voting underway across Anambra state",
    "There is fear of violence in some parts of Onitsha, stay safe everyone",
    "Godwin Ezeemo of PPA votes in his home town, calls for calm",
    "Nwoye APC agents harassed at polling unit 004 in Awka South",
    "This votting process is very smooth, no wahala at all",
    "Thugs snatched ballot boxes in one ward, security must act now",
    "Obiano is not a good governor, vote him out #AnambraDecides",
    "I love how calm Awka is today, great job INEC",
    "Results collation begins, APGA leading in early results",
    "PDP rejects the results from some units, alleges fraud",
    "Oseloka Obaze is the best candidate but PDP lacks structure",
    "Chidoka and UPP supporters are hopeful of a strong showing",
    "Rain is falling but voters are still on the queue, impressive",
    "RT @vanguardngrnews: INEC announces collation centres",
    "No card reader, no voting, this is the worst election day",
    "APC and PDP are sad losers, APGA is the people's party",
    "The turnout is poor because people lost hope in politicians",
    "Obiano has done well, I voted APGA with joy",
    "Electorate in Nnewi not happy with the delay in accreditation",
    "Good morning Anambra! Go out and vote for your candidate of choice",
    "Vote buying is a crime, INEC and police should arrest offenders",
    "Ezeemo PPA wants a free and fair election, nothing more",
    "Nwoye is failing to inspire voters in his own ward",
    "APGA APC PDP all claim victory already lol",
    "Osita Chidoka UPP is the future of Anambra",
    "Situation report: calm in Awka, tense in Onitsha, late start in Nnewi",
    "Fear of violence kept many people at home today",
    "Obaze PDP team alleging rigging in Ihiala",
    "INEC says the card readers are working well in most units",
    "Turnout is low but the process is credible so far",
    "I will not vote for Obiano, he failed us",
    "Happy to have voted peacefully, thank you INEC",
    '{"id_str": "broken", "text": "truncated line',
    "The APC candidate Nwoye looks strong in Onitsha",
    "RT @saharareporters: Thugs disrupt voting in Ihiala",
    "Late night collation, results trickling in, APGA ahead",
    "Obiano and APGA celebrate as results come in, congratulations",
    "PDP Obaze congratulates the winner, calls for peace",
]


def tweets_jsonl():
    rng = random.Random(20171118)
    lines = []
    # 04:30Z .. 23:10Z, i.e. 05:30 .. 00:10 local at +01:00
    seconds = sorted(rng.randrange(4 * 3600 + 1800, 23 * 3600 + 600) for _ in TWEETS)
    days = ["Sat"]
    for i, (text, secs) in enumerate(zip(TWEETS, seconds)):
        if text.startswith('{"id_str"'):
            lines.append(text)
            continue
        h, rem = divmod(secs, 3600)
        m, s = divmod(rem, 60)
        obj = {
            "created_at": f"{days[0]} Nov 18 {h:02d}:{m:02d}:{s:02d} +0000 2017",
            "id_str": str(931500000000000000 + i * 7919),
            "text": text,
            "user": {"screen_name": f"user{rng.randrange(1000):03d}"},
        }
        if text.startswith("RT @"):
            obj["retweeted_status"] = {"id_str": str(931400000000000000 + i)}
        lines.append(json.dumps(obj, ensure_ascii=False))
    (FIX / "tweets.jsonl").write_text("\n".join(lines) + "\n", encoding="utf-8")


NBC_CORPUS = [
    ("positive", "peaceful voting and great turnout"),
    ("positive", "congratulations to the winner, a credible election"),
    ("positive", "happy with the smooth process"),
    ("positive", "i love the calm in awka today"),
    ("positive", "good job by the officials, well done"),
    ("positive", "best election so far, free and fair"),
    ("positive", "impressive turnout and orderly queues"),
    ("positive", "thank you for a peaceful day"),
    ("negative", "violence and thugs at the polling unit"),
    ("negative", "vote buying is a shame"),
    ("negative", "card readers failing everywhere, bad process"),
    ("negative", "rigging and fraud alleged by agents"),
    ("negative", "poor turnout and late start"),
    ("negative", "angry voters waiting since morning"),
    ("negative", "worst election day ever"),
    ("negative", "fear kept people at home"),
    ("neutral", "collation of results begins at the centre"),
    ("neutral", "voting underway across the state"),
    ("neutral", "the candidate cast his vote in his ward"),
    ("neutral", "results expected later tonight"),
    ("neutral", "officials arrived at the polling unit"),
    ("neutral", "agents are present at the collation centre"),
]


def nbc_corpus():
    with open(FIX / "nbc_corpus.csv", "w", newline="") as f:
        out = csv.writer(f, lineterminator="\n")
        out.writerow(["label", "text"])
        out.writerows(NBC_CORPUS)


MICRO = {
    "nbc_micro_1.csv": [("pos", "good great"), ("pos", "good fine"), ("pos", "great day"),
                        ("neg", "bad awful")],
    "nbc_micro_2.csv": [("positive", "win happy happy"), ("negative", "lose sad"),
                        ("neutral", "vote today"), ("negative", "sad angry lose"),
                        ("positive", "happy vote"), ("neutral", "today result")],
    "nbc_micro_3.csv": [("a", "x y z"), ("b", "y y w"), ("a", "x x"), ("c", "v u t"),
                        ("b", "w s"), ("c", "t t r")],
}


def micro_corpora():
    for name, rows in MICRO.items():
        with open(TDATA / name, "w", newline="") as f:
            out = csv.writer(f, lineterminator="\n")
            out.writerow(["label", "text"])
            out.writerows(rows)


PORTER_CLASSIC = """caresses ponies ties caress cats feed agreed plastered bled motoring sing
conflated troubled sized hopping tanned falling hissing fizzed failing filing happy sky relational
conditional rational valenci hesitanci digitizer conformabli""".split()


def porter_vectors():
    stemmer = porter.PorterStemmer(mode=porter.PorterStemmer.MARTIN_EXTENSIONS)
    with open(TDATA / "porter_classic.tsv", "w") as f:
        for w in PORTER_CLASSIC:
            f.write(f"{w}\t{stemmer.stem(w)}\n")
    words = []
    for line in (TB / "en-spelling.txt").read_text().splitlines():
        if line.startswith(";;;") or not line.strip():
            continue
        w = line.split()[0]
        if w.isalpha() and w.islower() and w.isascii():
            words.append(w)
    rng = random.Random(7)
    sample = sorted(rng.sample(words, 5000))
    with open(TDATA / "porter_vocabulary.tsv", "w") as f:
        for w in sample:
            f.write(f"{w}\t{stemmer.stem(w)}\n")


def ingest_fixture():
    base = {"user": {"screen_name": "someone"}}
    rows = []
    for i in range(10):
        if i == 4:
            rows.append('{"id_str": "1004", "created_at": "Sat Nov 18 10:00:00 +0000 2017", "text"')
            continue
        obj = dict(base)
        obj["id_str"] = str(1000 + i)
        obj["created_at"] = f"Sat Nov 18 {6 + i:02d}:15:00 +0000 2017"
        obj["text"] = f"tweet number {i} about apga" if i % 3 == 0 else f"plain tweet {i}"
        if i in (2, 7):
            obj["text"] = "RT @someone: " + obj["text"]
            if i == 2:
                obj["retweeted_status"] = {"id_str": "99"}
        rows.append(json.dumps(obj))
    (TDATA / "ingest_ten.jsonl").write_text("\n".join(rows) + "\n")


def main():
    FIX.mkdir(parents=True, exist_ok=True)
    TDATA.mkdir(parents=True, exist_ok=True)
    (FIX / "stopwords.txt").write_text(
        "# English function words\n" + "\n".join(STOPWORDS) + "\n")
    (FIX / "negators.txt").write_text("\n".join(NEGATORS) + "\n")
    n_pattern = pattern_lexicon()
    n_dict = dictionary()
    sense_lexicon()
    actors_ini()
    tweets_jsonl()
    nbc_corpus()
    micro_corpora()
    porter_vectors()
    ingest_fixture()
    print(f"pattern rows {n_pattern}, dictionary words {n_dict}")


if __name__ == "__main__":
    main()
