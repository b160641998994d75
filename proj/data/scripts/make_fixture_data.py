#!/usr/bin/env python3
# Copyright 2026 The Stylomark Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates the committed fixture data under data/.

The corpus is a synthetic, public-domain news-like text produced from a
seeded phrase grammar. It exists so the toy n-gram model has something
with realistic sentence structure to learn from. Output is deterministic.

    python3 data/scripts/make_fixture_data.py
"""

import csv
import os
import random
import re

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

CLASSES = ["touch", "hearing", "smell", "taste", "vision", "interoception",
           "mouth_throat", "hand_arm", "foot_leg", "head", "torso"]

# Lexicon words grouped by dominant class. Each inner list is a synonym group.
LEXICON = {
    "touch": [["soft", "gentle", "tender"], ["rough", "coarse"], ["smooth", "sleek"],
              ["warm", "mild"], ["cold", "chilly", "icy"], ["silk", "satin"],
              ["wool", "fleece"], ["sticky", "tacky"], ["sharp", "jagged"]],
    "hearing": [["sound", "tone"], ["noise", "racket", "din"], ["music", "melody", "tune"],
                ["song", "anthem"], ["voice", "chant"], ["loud", "noisy", "booming"],
                ["quiet", "hushed", "silent"], ["whisper", "murmur"], ["echo", "reverb"],
                ["bell", "chime"], ["siren", "alarm"], ["thunder", "rumble"],
                ["radio", "broadcast"], ["applause", "cheering"], ["drum", "drumbeat"]],
    "smell": [["smoke", "fumes"], ["scent", "aroma", "fragrance"], ["odor", "stench"],
              ["perfume", "cologne"], ["garlic", "onion"], ["incense", "musk"]],
    "taste": [["sweet", "sugary"], ["sour", "tart"], ["bitter", "acrid"], ["salty", "briny"],
              ["flavor", "savor"], ["spicy", "peppery"], ["honey", "syrup"],
              ["lemon", "lime"], ["coffee", "espresso"], ["soup", "broth", "stew"],
              ["bread", "loaf"], ["cake", "pastry"]],
    "vision": [["color", "hue"], ["bright", "vivid", "brilliant"], ["light", "glow"],
               ["shadow", "shade"], ["view", "vista", "scene"], ["picture", "photo", "image"],
               ["screen", "display"], ["sky", "horizon"], ["dark", "dim", "murky"],
               ["red", "crimson", "scarlet"], ["blue", "azure"], ["golden", "gilded"],
               ["sparkle", "glitter", "shimmer"], ["watch", "observe"], ["painting", "mural"]],
    "interoception": [["hungry", "famished", "starving"], ["tired", "weary", "exhausted"],
                      ["thirsty", "parched"], ["pain", "ache", "soreness"], ["fever", "chill"],
                      ["anxious", "nervous", "uneasy"], ["calm", "relaxed", "serene"],
                      ["dizzy", "giddy"], ["nausea", "queasiness"]],
    "mouth_throat": [["speak", "talk"], ["eat", "dine"], ["drink", "sip"], ["swallow", "gulp"],
                     ["sing", "hum"], ["lips", "mouth"], ["tongue", "palate"], ["chew", "munch"],
                     ["cough", "sneeze"], ["kiss", "smooch"], ["yell", "holler"]],
    "hand_arm": [["grab", "grasp", "seize"], ["hold", "clutch"], ["throw", "toss", "hurl"],
                 ["write", "scribble"], ["carry", "haul", "lug"], ["wave", "gesture"],
                 ["build", "assemble", "construct"], ["hammer", "mallet"], ["paint", "brush"],
                 ["catch", "snatch"], ["knit", "sew", "stitch"], ["clap", "applaud"],
                 ["lift", "hoist"]],
    "foot_leg": [["walk", "stroll", "wander"], ["run", "sprint", "dash"], ["kick", "punt"],
                 ["march", "parade"], ["step", "stride"], ["jump", "leap", "hop"],
                 ["dance", "waltz"], ["hike", "trek"], ["climb", "ascend", "scale"],
                 ["skate", "glide"], ["pedal", "cycle"]],
    "head": [["think", "ponder", "reflect"], ["nod", "bob"], ["remember", "recall", "recollect"],
             ["decide", "resolve"], ["plan", "scheme"], ["dream", "imagine", "envision"],
             ["hat", "cap"], ["helmet", "headgear"], ["brain", "mind"], ["forehead", "brow"]],
    "torso": [["breathe", "inhale"], ["hug", "embrace"], ["lean", "tilt"], ["bow", "curtsy"],
              ["shrug", "slouch"], ["heart", "chest"], ["belly", "stomach", "gut"],
              ["shoulder", "spine"], ["sweater", "jacket", "vest"]],
}

# Non-lexicon content vocabulary, also organised in synonym groups.
NOUNS = [["council", "committee", "board"], ["city", "town", "municipality"],
         ["residents", "citizens", "locals"], ["officials", "authorities", "leaders"],
         ["report", "study", "survey"], ["market", "exchange"], ["company", "firm", "business"],
         ["school", "academy"], ["festival", "fair", "celebration"], ["team", "squad", "club"],
         ["season", "campaign"], ["budget", "spending"], ["project", "initiative", "program"],
         ["bridge", "overpass"], ["park", "garden"], ["river", "stream"], ["harbor", "port"],
         ["museum", "gallery"], ["library", "archive"], ["hospital", "clinic"],
         ["farmers", "growers"], ["students", "pupils"], ["workers", "employees", "staff"],
         ["visitors", "tourists", "guests"], ["match", "game", "contest"], ["crowd", "audience"],
         ["storm", "tempest"], ["weather", "climate"], ["forecast", "outlook"],
         ["election", "vote", "ballot"], ["plan", "proposal"], ["road", "street", "avenue"],
         ["village", "hamlet"], ["region", "district", "area"], ["stadium", "arena"],
         ["kitchen", "bakery"], ["restaurant", "cafe", "diner"], ["orchestra", "band", "ensemble"],
         ["scientists", "researchers"], ["engineers", "builders"], ["mayor", "governor"],
         ["police", "officers"], ["children", "kids", "youngsters"], ["families", "households"],
         ["weekend", "holiday"], ["morning", "dawn"], ["evening", "dusk", "night"],
         ["event", "occasion"], ["price", "cost", "fee"], ["hall", "auditorium"],
         ["neighborhood", "community"], ["trail", "path", "route"], ["mountain", "peak", "summit"],
         ["beach", "shore", "coast"], ["train", "tram"], ["station", "terminal"],
         ["results", "findings", "outcomes"], ["record", "milestone"], ["fans", "supporters"]]
ADJS = [["local", "regional"], ["new", "fresh", "novel"], ["old", "ancient", "historic"],
        ["large", "huge", "vast"], ["small", "tiny", "modest"], ["busy", "crowded", "packed"],
        ["annual", "yearly"], ["public", "civic"], ["strong", "robust", "sturdy"],
        ["early", "initial"], ["final", "closing"], ["popular", "beloved", "favored"],
        ["rare", "unusual", "uncommon"], ["recent", "latest"], ["major", "significant", "key"],
        ["happy", "cheerful", "joyful"], ["careful", "cautious"], ["quick", "rapid", "swift"],
        ["steady", "constant"], ["famous", "renowned", "celebrated"]]
VERBS_T = [["approved", "endorsed", "backed"], ["announced", "declared", "revealed"],
           ["opened", "launched", "unveiled"], ["reviewed", "examined", "assessed"],
           ["praised", "lauded", "applauded"], ["criticized", "condemned"],
           ["funded", "financed", "sponsored"], ["welcomed", "greeted"],
           ["delayed", "postponed"], ["expanded", "extended", "enlarged"],
           ["visited", "toured"], ["hosted", "organized", "staged"],
           ["won", "captured", "secured"], ["lost", "forfeited"], ["supported", "aided", "helped"]]
VERBS_I = [["gathered", "assembled", "met"], ["celebrated", "rejoiced"], ["waited", "lingered"],
           ["returned", "came back"], ["rose", "climbed"], ["fell", "dropped", "declined"],
           ["recovered", "rebounded"], ["arrived", "appeared"], ["continued", "persisted"],
           ["improved", "progressed"]]
ADVS = [["quickly", "swiftly", "rapidly"], ["slowly", "gradually"], ["finally", "eventually"],
        ["again", "once more"], ["yesterday", "recently"], ["today", "now"],
        ["carefully", "cautiously"], ["loudly", "noisily"], ["quietly", "softly"],
        ["together", "jointly"], ["outside", "outdoors"]]
NAMES = ["Alder", "Brook", "Carver", "Dalton", "Ellis", "Fenwick", "Garcia", "Hollis",
         "Ingram", "Jensen", "Keller", "Lopez", "Marsh", "Nolan", "Ortiz", "Porter",
         "Quinn", "Reyes", "Sutton", "Tanaka", "Upton", "Vance", "Whitaker", "Xavier",
         "Young", "Zimmer"]
PLACES = ["Ashford", "Bayview", "Cedar Falls", "Dunmore", "Eastbrook", "Fairhaven",
          "Glenwood", "Harborside", "Ironvale", "Juniper Hill", "Kingsport", "Lakemont",
          "Maplewood", "Northgate", "Oakridge", "Pinecrest", "Riverton", "Stonebridge",
          "Thornbury", "Westfield"]
MONTHS = ["January", "February", "March", "April", "May", "June", "July", "August",
          "September", "October", "November", "December"]

# Verb inflections used in the corpus, keyed by lemma.
def past(v):
    irregular = {"run": "ran", "eat": "ate", "drink": "drank", "swallow": "swallowed",
                 "sing": "sang", "speak": "spoke", "throw": "threw", "write": "wrote",
                 "hold": "held", "catch": "caught", "build": "built", "think": "thought",
                 "seize": "seized", "hum": "hummed", "nod": "nodded", "step": "stepped",
                 "hop": "hopped", "plan": "planned", "grab": "grabbed", "dash": "dashed",
                 "bob": "bobbed", "dream": "dreamed", "knit": "knitted", "clap": "clapped",
                 "sip": "sipped", "lug": "lugged", "chew": "chewed", "kiss": "kissed",
                 "hug": "hugged", "leap": "leapt", "stride": "strode", "ascend": "ascended",
                 "sprint": "sprinted", "punt": "punted", "scale": "scaled", "cycle": "cycled",
                 "pedal": "pedaled", "sew": "sewed", "stitch": "stitched", "resolve": "resolved",
                 "tilt": "tilted", "slouch": "slouched", "inhale": "inhaled"}
    if v in irregular:
        return irregular[v]
    if v.endswith("e"):
        return v + "d"
    if v.endswith("y") and v[-2] not in "aeiou":
        return v[:-1] + "ied"
    return v + "ed"


def gerund(v):
    special = {"run": "running", "hum": "humming", "nod": "nodding", "step": "stepping",
               "hop": "hopping", "plan": "planning", "grab": "grabbing", "bob": "bobbing",
               "knit": "knitting", "clap": "clapping", "sip": "sipping", "lug": "lugging",
               "hug": "hugging", "swim": "swimming"}
    if v in special:
        return special[v]
    if v.endswith("ie"):
        return v[:-2] + "ying"
    if v.endswith("e") and not v.endswith("ee"):
        return v[:-1] + "ing"
    return v + "ing"


VERB_LEX = {"mouth_throat": ["speak", "talk", "eat", "dine", "drink", "sip", "swallow", "gulp",
                             "sing", "hum", "chew", "munch", "cough", "sneeze", "kiss", "yell",
                             "holler"],
            "hand_arm": ["grab", "grasp", "seize", "hold", "clutch", "throw", "toss", "hurl",
                         "write", "scribble", "carry", "haul", "lug", "wave", "gesture", "build",
                         "assemble", "construct", "paint", "brush", "catch", "snatch", "knit",
                         "sew", "stitch", "clap", "applaud", "lift", "hoist"],
            "foot_leg": ["walk", "stroll", "wander", "run", "sprint", "dash", "kick", "punt",
                         "march", "parade", "step", "stride", "jump", "leap", "hop", "dance",
                         "waltz", "hike", "trek", "climb", "ascend", "scale", "skate", "glide",
                         "pedal", "cycle"],
            "head": ["think", "ponder", "reflect", "nod", "bob", "remember", "recall",
                     "recollect", "decide", "resolve", "plan", "scheme", "dream", "imagine",
                     "envision"],
            "torso": ["breathe", "inhale", "hug", "embrace", "lean", "tilt", "bow", "curtsy",
                      "shrug", "slouch"],
            "vision": ["watch", "observe", "sparkle", "glitter", "shimmer"],
            "hearing": ["whisper", "murmur", "echo", "chant"]}

SENSORY_NOUNS = {"touch": ["silk", "satin", "wool", "fleece"],
                 "hearing": ["sound", "tone", "noise", "racket", "din", "music", "melody", "tune",
                             "song", "anthem", "voice", "bell", "chime", "siren", "alarm",
                             "thunder", "rumble", "radio", "broadcast", "applause", "cheering",
                             "drum", "drumbeat"],
                 "smell": ["smoke", "fumes", "scent", "aroma", "fragrance", "odor", "stench",
                           "perfume", "cologne", "garlic", "onion", "incense", "musk"],
                 "taste": ["flavor", "honey", "syrup", "lemon", "lime", "coffee", "espresso",
                           "soup", "broth", "stew", "bread", "loaf", "cake", "pastry"],
                 "vision": ["color", "hue", "light", "glow", "shadow", "shade", "view", "vista",
                            "scene", "picture", "photo", "image", "screen", "display", "sky",
                            "horizon", "painting", "mural"],
                 "interoception": ["pain", "ache", "soreness", "fever", "chill", "nausea",
                                   "queasiness"],
                 "mouth_throat": ["lips", "mouth", "tongue", "palate"],
                 "hand_arm": ["hammer", "mallet"],
                 "head": ["hat", "cap", "helmet", "headgear", "brain", "mind", "forehead",
                          "brow"],
                 "torso": ["heart", "chest", "belly", "stomach", "gut", "shoulder", "spine",
                           "sweater", "jacket", "vest"]}
SENSORY_ADJS = {"touch": ["soft", "gentle", "tender", "rough", "coarse", "smooth", "sleek",
                          "warm", "mild", "cold", "chilly", "icy", "sticky", "tacky", "sharp",
                          "jagged"],
                "hearing": ["loud", "noisy", "booming", "quiet", "hushed", "silent"],
                "taste": ["sweet", "sugary", "sour", "tart", "bitter", "acrid", "salty",
                          "briny", "spicy", "peppery"],
                "vision": ["bright", "vivid", "brilliant", "dark", "dim", "murky", "red",
                           "crimson", "scarlet", "blue", "azure", "golden", "gilded"],
                "interoception": ["hungry", "famished", "starving", "tired", "weary",
                                  "exhausted", "thirsty", "parched", "anxious", "nervous",
                                  "uneasy", "calm", "relaxed", "serene", "dizzy", "giddy"]}


def flat(groups):
    return [w for g in groups for w in g]


class Grammar:
    def __init__(self, rng):
        self.r = rng
        self.nouns = flat(NOUNS)
        self.adjs = flat(ADJS)
        self.vt = flat(VERBS_T)
        self.vi = flat(VERBS_I)
        self.advs = flat(ADVS)
        self.sn = flat(SENSORY_NOUNS.values())
        self.sa = flat(SENSORY_ADJS.values())
        self.sv = flat(VERB_LEX.values())

    def c(self, xs):
        return self.r.choice(xs)

    def maybe(self, p, s):
        return s if self.r.random() < p else ""

    def adj(self):
        return self.c(self.sa) if self.r.random() < 0.45 else self.c(self.adjs)

    def noun(self):
        return self.c(self.sn) if self.r.random() < 0.3 else self.c(self.nouns)

    def np(self):
        det = self.c(["the", "the", "the", "a", "this", "their", "its", "every", "one"])
        parts = [det]
        if self.r.random() < 0.5:
            parts.append(self.adj())
        parts.append(self.noun())
        if self.r.random() < 0.12:
            parts += ["of", self.c(PLACES)]
        return " ".join(parts)

    def subj(self):
        x = self.r.random()
        if x < 0.15:
            return self.c(["Mayor", "Coach", "Professor", "Chef", "Director", "Doctor"]) + " " + self.c(NAMES)
        if x < 0.25:
            return self.c(["residents", "officials", "visitors", "students", "fans", "workers",
                           "families", "researchers", "farmers", "children"])
        if x < 0.32:
            return self.c(["she", "he", "they", "we", "many", "some", "others"])
        return self.np()

    def pp(self):
        prep = self.c(["in", "near", "at", "across", "behind", "beside", "during", "after",
                       "before", "around", "under", "along"])
        if prep in ("during", "after", "before"):
            return prep + " " + self.c(["the " + self.c(["storm", "festival", "match", "meeting",
                                                            "election", "parade", "concert",
                                                            "weekend", "holiday"]),
                                          self.c(MONTHS)])
        if self.r.random() < 0.3:
            return prep + " " + self.c(PLACES)
        return prep + " " + self.np()

    def vp(self):
        x = self.r.random()
        if x < 0.35:
            return self.c(self.vt) + " " + self.np()
        if x < 0.55:
            return self.c(self.vi)
        if x < 0.8:
            v = self.c(self.sv)
            return past(v) + self.maybe(0.5, " " + self.np())
        if x < 0.9:
            return self.c(["kept", "started", "began", "enjoyed", "stopped", "loved"]) + " " + gerund(self.c(self.sv))
        return self.c(["was", "seemed", "felt", "looked", "became"]) + " " + self.c(self.sa + self.adjs)

    def sentence(self):
        x = self.r.random()
        opener = ""
        if x < 0.18:
            opener = self.c(["On " + self.c(["Monday", "Tuesday", "Friday", "Saturday", "Sunday"]),
                             "Earlier this " + self.c(["week", "month", "year"]),
                             "In " + self.c(MONTHS), "According to " + self.c(["officials", "the report", "witnesses", "organizers"]),
                             "Meanwhile", "However", "Later", "At first", "By noon", "Overall"]) + ","
        s = " ".join(p for p in [opener, self.subj(), self.vp()] if p)
        if self.r.random() < 0.55:
            s += " " + self.pp()
        if self.r.random() < 0.25:
            s += " " + self.c(self.advs)
        y = self.r.random()
        if y < 0.12:
            s += ", " + self.c(["and", "but", "while", "as"]) + " " + self.subj() + " " + self.vp()
        elif y < 0.2:
            s += ", " + self.c(["said", "added", "noted", "reported"]) + " " + self.c(["Mayor", "Coach", "Director"]) + " " + self.c(NAMES)
        end = self.r.random()
        term = "." if end < 0.9 else ("!" if end < 0.95 else "?")
        s = s[0].upper() + s[1:]
        return s + term

    def document(self, min_tokens):
        sents = []
        n = 0
        while n < min_tokens:
            s = self.sentence()
            sents.append(s)
            n += len(s.split())
        return " ".join(sents)


def write_corpus(rng, path, docs, min_tokens):
    g = Grammar(rng)
    with open(path, "w") as f:
        for i in range(docs):
            if i:
                f.write("\n\n")
            f.write(g.document(min_tokens + rng.randint(0, 60)))
        f.write("\n")


def ratings_for(rng, cls_index, tie_with=None):
    vals = [round(rng.uniform(0.0, 2.4), 2) for _ in CLASSES]
    top = round(rng.uniform(3.0, 4.9), 2)
    vals[cls_index] = top
    if tie_with is not None:
        vals[tie_with] = top
    return vals


def write_norms(rng):
    header = ["word"] + CLASSES
    rows = []
    for cls, groups in LEXICON.items():
        ci = CLASSES.index(cls)
        for w in flat(groups):
            rows.append([w] + ratings_for(rng, ci))
    rows.sort(key=lambda r: r[0])
    with open(os.path.join(ROOT, "norms", "toy_norms.csv"), "w", newline="") as f:
        wr = csv.writer(f)
        wr.writerow(header)
        wr.writerows(rows)
    return {r[0]: CLASSES[max(range(11), key=lambda i: (r[1 + i], -i))] for r in rows}


def write_fixture_norms(rng):
    # 50 words: mostly clear winners, a handful of exact ties, and a few
    # all-zero rows that the loader must drop (list has 53 rows in total).
    words = [("whisper", 1), ("thunder", 1), ("melody", 1), ("silk", 0), ("velvet", 0),
             ("pebble", 0), ("smoke", 2), ("perfume", 2), ("garlic", 2), ("honey", 3),
             ("lemon", 3), ("salty", 3), ("rainbow", 4), ("glitter", 4), ("shadow", 4),
             ("hungry", 5), ("fever", 5), ("nausea", 5), ("swallow", 6), ("chew", 6),
             ("cough", 6), ("grab", 7), ("hammer", 7), ("knit", 7), ("kick", 8),
             ("march", 8), ("skate", 8), ("nod", 9), ("ponder", 9), ("helmet", 9),
             ("breathe", 10), ("shrug", 10), ("hug", 10), ("bell", 1), ("wool", 0),
             ("incense", 2), ("sour", 3), ("bright", 4), ("thirsty", 5), ("lips", 6),
             ("throw", 7), ("dance", 8), ("dream", 9), ("chest", 10), ("cat", 4)]
    ties = [("crunch", 2, 5), ("sizzle", 1, 3), ("tickle", 0, 7), ("stomp", 8, 9),
            ("sniff", 2, 6)]
    zeros = ["vacuum", "nothing", "null"]
    rows, expected = [], []
    for w, ci in words:
        rows.append([w] + ratings_for(rng, ci))
        expected.append((w, CLASSES[ci]))
    for w, a, b in ties:
        rows.append([w] + ratings_for(rng, b, tie_with=a))
        expected.append((w, CLASSES[min(a, b)]))
    for w in zeros:
        rows.append([w] + [0.0] * 11)
    order = list(range(len(rows)))
    rng.shuffle(order)
    rows = [rows[i] for i in order]
    d = os.path.join(ROOT, "fixtures")
    with open(os.path.join(d, "norms_50.csv"), "w", newline="") as f:
        wr = csv.writer(f)
        wr.writerow(["word"] + CLASSES)
        for r in rows:
            # Mixed case on a few words exercises case-insensitive lookup.
            w = r[0].capitalize() if r[0] in ("whisper", "rainbow", "hug") else r[0]
            wr.writerow([w] + r[1:])
    with open(os.path.join(d, "norms_50_expected.csv"), "w", newline="") as f:
        wr = csv.writer(f)
        wr.writerow(["word", "class"])
        for w, c in sorted(expected):
            wr.writerow([w, c])


def write_frequencies(word_class):
    """Counts class occurrences of lexicon words (and their inflections) in the corpus."""
    counts = {c: 0 for c in CLASSES}
    forms = dict(word_class)
    for verbs in VERB_LEX.values():
        for v in verbs:
            if v in word_class:
                forms.setdefault(past(v), word_class[v])
                forms.setdefault(gerund(v), word_class[v])
    with open(os.path.join(ROOT, "corpus", "news_fixture.txt")) as f:
        for tok in f.read().split():
            w = re.sub(r"[^a-z]", "", tok.lower())
            if w in forms:
                counts[forms[w]] += 1
            elif w.endswith("s") and w[:-1] in forms:
                counts[forms[w[:-1]]] += 1
    with open(os.path.join(ROOT, "norms", "toy_class_frequencies.csv"), "w", newline="") as f:
        wr = csv.writer(f)
        wr.writerow(["class", "frequency"])
        for c in CLASSES:
            wr.writerow([c, max(counts[c], 1)])


def write_fixture_frequencies():
    d = os.path.join(ROOT, "fixtures")
    freqs = [("touch", 120), ("hearing", 300), ("smell", 40), ("taste", 80), ("vision", 900),
             ("interoception", 60), ("mouth_throat", 100), ("hand_arm", 200),
             ("foot_leg", 100), ("head", 50), ("torso", 50)]
    with open(os.path.join(d, "frequencies_toy.csv"), "w", newline="") as f:
        wr = csv.writer(f)
        wr.writerow(["class", "frequency"])
        wr.writerows(freqs)
    with open(os.path.join(d, "frequencies_single.csv"), "w", newline="") as f:
        wr = csv.writer(f)
        wr.writerow(["class", "frequency"])
        wr.writerow(["vision", 42])


def write_synonyms():
    groups = []
    for gs in LEXICON.values():
        groups += gs
    groups += NOUNS + ADJS + VERBS_T + VERBS_I + ADVS
    pairs = set()
    for g in groups:
        g = [w for w in g if " " not in w]
        for a in g:
            for b in g:
                if a != b:
                    pairs.add((a, b))
    # Inflected verb forms of lexicon verbs pair up within their synonym group.
    for gs in LEXICON.values():
        for g in gs:
            verbs = [w for w in g if any(w in v for v in VERB_LEX.values())]
            for a in verbs:
                for b in verbs:
                    if a != b:
                        pairs.add((past(a), past(b)))
                        pairs.add((gerund(a), gerund(b)))
    with open(os.path.join(ROOT, "synonyms.csv"), "w", newline="") as f:
        wr = csv.writer(f)
        wr.writerow(["word", "synonym"])
        wr.writerows(sorted(pairs))
    return len(pairs)


def main():
    rng = random.Random(20240917)
    os.makedirs(os.path.join(ROOT, "corpus"), exist_ok=True)
    os.makedirs(os.path.join(ROOT, "norms"), exist_ok=True)
    os.makedirs(os.path.join(ROOT, "fixtures"), exist_ok=True)
    write_corpus(rng, os.path.join(ROOT, "corpus", "news_fixture.txt"), docs=600, min_tokens=330)
    word_class = write_norms(rng)
    write_frequencies(word_class)
    write_fixture_norms(rng)
    write_fixture_frequencies()
    n = write_synonyms()
    print("synonym pairs:", n)


if __name__ == "__main__":
    main()
