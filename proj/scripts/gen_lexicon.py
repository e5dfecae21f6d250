#!/usr/bin/env python3
"""Builds the surface-form rows of data/lexicon.tsv.

Each seed word carries a valence in [-4, 4]. Polarity is valence / 4,
subjectivity is a heuristic of valence magnitude. Inflected variants are
generated with simple orthographic rules and inherit the seed's scores.
Stemmed duplicates are appended afterwards by tools/lexicon_stems (the C++
stemmer is the source of truth for stem spellings).
"""
import sys

POSITIVE = {
    # strong (3.0 .. 4.0)
    "superb": 3.4, "magnificent": 3.4, "outstanding": 3.4, "phenomenal": 3.6,
    "wonderful": 3.2, "fantastic": 3.3, "excellent": 3.2, "love": 3.2,
    "adore": 3.2, "brilliant": 3.0, "amazing": 3.0, "awesome": 3.1,
    "great": 3.1, "perfect": 3.2, "marvelous": 3.2, "splendid": 3.0,
    "spectacular": 3.1, "exceptional": 3.1, "delightful": 3.0, "bliss": 3.3,
    "ecstatic": 3.4, "exhilarating": 3.2, "triumphant": 3.1, "masterpiece": 3.3,
    "heavenly": 3.2, "glorious": 3.2, "best": 3.2, "thrilled": 3.3,
    "overjoyed": 3.4, "euphoric": 3.6,
    # medium (2.0 .. 2.9)
    "happy": 2.7, "joy": 2.8, "joyful": 2.9, "beautiful": 2.9, "win": 2.8,
    "winner": 2.8, "victory": 2.8, "success": 2.7, "successful": 2.7,
    "smile": 2.3, "laugh": 2.6, "celebrate": 2.7, "cheerful": 2.5,
    "delicious": 2.6, "gorgeous": 2.8, "impressive": 2.3, "inspire": 2.4,
    "inspiring": 2.6, "fabulous": 2.8, "lovely": 2.8, "charming": 2.4,
    "excited": 2.6, "exciting": 2.4, "grateful": 2.4, "thankful": 2.4,
    "thanks": 2.0, "thank": 2.0, "proud": 2.4, "passion": 2.4,
    "passionate": 2.5, "admire": 2.2, "adorable": 2.6, "angel": 2.2,
    "bless": 2.4, "blessed": 2.7, "brave": 2.2, "confident": 2.3,
    "courage": 2.3, "creative": 2.1, "dream": 2.0, "eager": 2.0,
    "elegant": 2.3, "energetic": 2.2, "enthusiastic": 2.6, "faith": 2.0,
    "favorite": 2.4, "free": 2.0, "freedom": 2.5, "friend": 2.2,
    "friendly": 2.2, "generous": 2.3, "genius": 2.6, "gift": 2.0,
    "glad": 2.2, "glow": 2.0, "graceful": 2.2, "heal": 2.0, "healthy": 2.1,
    "hero": 2.5, "honor": 2.3, "hope": 2.0, "hopeful": 2.2, "hug": 2.1,
    "kindness": 2.5, "luck": 2.1, "lucky": 2.4, "paradise": 2.8,
    "peace": 2.5, "peaceful": 2.4, "pleasure": 2.6, "precious": 2.5,
    "pretty": 2.2, "radiant": 2.5, "rejoice": 2.7, "relief": 2.1,
    "relieved": 2.2, "rich": 2.0, "romantic": 2.3, "satisfied": 2.2,
    "stunning": 2.8, "sweet": 2.2, "talented": 2.3, "treasure": 2.4,
    "vibrant": 2.3, "warm": 2.0, "wealth": 2.2, "wise": 2.2, "wow": 2.8,
    "yay": 2.4, "fun": 2.3, "funny": 2.2, "enjoy": 2.2, "enjoyable": 2.4,
    # mild (0.5 .. 1.9)
    "good": 1.9, "nice": 1.8, "like": 1.5, "likes": 1.5, "liked": 1.5,
    "cool": 1.3, "fine": 1.1, "okay": 0.9, "ok": 0.9, "agree": 1.2,
    "agreeable": 1.4, "accept": 1.0, "benefit": 1.4, "better": 1.9,
    "bonus": 1.6, "bright": 1.5, "calm": 1.3, "care": 1.3, "caring": 1.8,
    "clean": 1.2, "clear": 1.0, "clever": 1.8, "comfort": 1.7,
    "comfortable": 1.6, "cozy": 1.7, "cute": 1.9, "decent": 1.2,
    "easy": 1.1, "encourage": 1.7, "fair": 1.0, "fresh": 1.3, "gain": 1.4,
    "gentle": 1.5, "help": 1.4, "helpful": 1.7, "honest": 1.7,
    "improve": 1.5, "improvement": 1.4, "interesting": 1.7, "keen": 1.2,
    "kind": 1.6, "neat": 1.5, "playful": 1.7, "pleasant": 1.8,
    "polite": 1.6, "positive": 1.8, "promise": 1.1, "protect": 1.2,
    "reward": 1.7, "safe": 1.4, "satisfy": 1.8, "secure": 1.3,
    "share": 1.0, "shine": 1.4, "smart": 1.6, "smooth": 1.2, "soft": 1.0,
    "solid": 1.0, "special": 1.6, "strong": 1.5, "support": 1.5,
    "tasty": 1.9, "tidy": 1.1, "useful": 1.5, "welcome": 1.6, "worthy": 1.7,
}

NEGATIVE = {
    # strong (-3.0 .. -4.0)
    "horrific": -3.4, "horrendous": -3.3, "atrocious": -3.4, "abysmal": -3.3,
    "catastrophe": -3.4, "catastrophic": -3.4, "devastating": -3.4,
    "devastated": -3.4, "disaster": -3.1, "disastrous": -3.2, "worst": -3.1,
    "hateful": -3.0, "horrible": -3.0, "torture": -3.4, "tragedy": -3.2,
    "tragic": -3.1, "agony": -3.2, "anguish": -3.1, "nightmare": -3.0,
    "murder": -3.5, "murderer": -3.5, "terrorist": -3.6, "evil": -3.2,
    "vile": -3.1, "wretched": -3.0, "despise": -3.1, "loathe": -3.2,
    "unbearable": -3.0, "excruciating": -3.4, "heartbroken": -3.2,
    # medium (-2.0 .. -2.9)
    "bad": -2.5, "hate": -2.7, "awful": -2.0, "terrible": -2.1, "angry": -2.3,
    "anger": -2.2, "furious": -2.8, "rage": -2.7, "disgust": -2.5,
    "disgusting": -2.6, "sad": -2.1, "sadness": -2.2, "miserable": -2.7,
    "misery": -2.7, "depressed": -2.3, "depressing": -2.3, "depression": -2.6,
    "cry": -2.1, "crying": -2.2, "tears": -2.0, "fear": -2.2, "afraid": -2.2,
    "scared": -2.2, "terrified": -2.9, "terror": -2.9, "panic": -2.4,
    "pain": -2.3, "painful": -2.4, "hurt": -2.4, "suffer": -2.4,
    "suffering": -2.5, "grief": -2.5, "mourn": -2.4, "ashamed": -2.1,
    "shame": -2.1, "shameful": -2.3, "disgrace": -2.5, "humiliate": -2.5,
    "humiliating": -2.6, "insult": -2.2, "insulting": -2.3, "offend": -2.1,
    "offensive": -2.3, "betray": -2.6, "betrayal": -2.7, "cheat": -2.3,
    "cheater": -2.4, "liar": -2.6, "lie": -2.0, "lies": -2.1, "fraud": -2.6,
    "scam": -2.6, "steal": -2.3, "stolen": -2.2, "thief": -2.4,
    "crime": -2.3, "criminal": -2.4, "violence": -2.7, "violent": -2.6,
    "attack": -2.1, "assault": -2.6, "abuse": -2.8, "abusive": -2.8,
    "threat": -2.2, "threaten": -2.3, "enemy": -2.2, "war": -2.5,
    "kill": -2.8, "killed": -2.8, "death": -2.6, "dead": -2.4, "die": -2.5,
    "disease": -2.1, "sick": -2.0, "cancer": -2.7, "poison": -2.3,
    "toxic": -2.4, "cruel": -2.7, "cruelty": -2.8, "brutal": -2.6,
    "ruin": -2.3, "ruined": -2.4, "destroy": -2.5, "destroyed": -2.5,
    "destruction": -2.6, "fail": -2.2, "failure": -2.4, "failed": -2.3,
    "hopeless": -2.5, "helpless": -2.3, "worthless": -2.7, "useless": -2.2,
    "pathetic": -2.5, "disappoint": -2.2, "disappointed": -2.3,
    "disappointing": -2.3, "disappointment": -2.4, "dreadful": -2.7,
    "ugly": -2.2, "nasty": -2.4, "filthy": -2.3, "rotten": -2.4,
    "stink": -2.1, "stinks": -2.2, "garbage": -2.1, "trash": -2.0,
    "jealous": -2.0, "envy": -2.0, "greedy": -2.2, "selfish": -2.1,
    "arrogant": -2.1, "rude": -2.2, "stupid": -2.4, "idiot": -2.6,
    "fool": -2.0, "foolish": -2.1, "dumb": -2.3, "crazy": -2.0,
    "insane": -2.2, "reject": -2.0, "rejected": -2.1, "lonely": -2.1,
    "alone": -2.0, "abandon": -2.4, "abandoned": -2.4, "lost": -2.0,
    # mild (-0.5 .. -1.9)
    "boring": -1.3, "bored": -1.4, "annoying": -1.8, "annoyed": -1.7,
    "annoy": -1.6, "irritate": -1.8, "irritating": -1.9, "bother": -1.4,
    "lose": -1.3, "loser": -1.9, "loss": -1.3, "problem": -1.1,
    "problems": -1.2, "trouble": -1.6, "worried": -1.6, "worry": -1.4,
    "anxious": -1.9, "anxiety": -1.9, "stress": -1.7, "stressed": -1.8,
    "stressful": -1.8, "tired": -1.2, "exhausted": -1.7, "weak": -1.3,
    "weary": -1.4, "sore": -1.3, "ache": -1.5, "cold": -0.8, "dark": -0.9,
    "dirty": -1.5, "doubt": -1.0, "dull": -1.2, "error": -1.3,
    "mistake": -1.3, "mistakes": -1.4, "broke": -1.4, "broken": -1.6,
    "damage": -1.6, "damaged": -1.7, "delay": -1.1, "delayed": -1.2,
    "deny": -1.2, "denied": -1.3, "difficult": -1.4, "hard": -0.6,
    "harsh": -1.7, "hassle": -1.6, "ignore": -1.4, "ignored": -1.5,
    "lame": -1.6, "lazy": -1.4, "mad": -1.9, "mess": -1.4, "messy": -1.5,
    "negative": -1.6, "noise": -0.9, "noisy": -1.2, "pity": -1.2,
    "poor": -1.6, "regret": -1.7, "sorry": -0.8, "strange": -0.8,
    "stuck": -1.2, "suck": -1.9, "sucks": -1.9, "unfair": -1.9,
    "unhappy": -1.9, "unlucky": -1.6, "upset": -1.8, "wrong": -1.4,
    "waste": -1.6, "wasted": -1.7, "weird": -1.0, "whine": -1.3,
    "complain": -1.4, "complaint": -1.5, "blame": -1.6, "bland": -1.1,
    "cheap": -1.0, "confused": -1.2, "confusing": -1.3, "awkward": -1.3,
}

BOOSTERS_UP = ["very", "really", "extremely", "absolutely", "totally",
               "incredibly", "completely", "utterly", "especially",
               "particularly", "truly", "super"]
BOOSTERS_DOWN = ["slightly", "somewhat", "barely", "marginally", "mildly",
                 "scarcely", "hardly"]
NEGATORS = ["not", "no", "nor", "never", "neither", "none", "nothing",
            "nobody", "nowhere", "without"]

VOWELS = set("aeiou")


def variants(word):
    out = []
    if word.endswith("e"):
        out += [word + "s", word + "d", word[:-1] + "ing"]
    elif word.endswith("y") and len(word) > 2 and word[-2] not in VOWELS:
        out += [word[:-1] + "ies", word[:-1] + "ied", word + "ing"]
    elif word.endswith(("s", "x", "z", "ch", "sh")):
        out += [word + "es", word + "ed", word + "ing"]
    else:
        out += [word + "s", word + "ed", word + "ing"]
    return out


def subjectivity(valence):
    return round(min(1.0, 0.35 + 0.16 * abs(valence)), 3)


def main():
    out_path = sys.argv[1] if len(sys.argv) > 1 else "data/lexicon.tsv"
    rows = {}

    def add(token, polarity, subj, valence, kind):
        if token in rows:
            return  # earlier (seed) rows win over generated variants
        rows[token] = (polarity, subj, valence, kind)

    for table, sign in ((POSITIVE, 1), (NEGATIVE, -1)):
        for word, valence in table.items():
            pol = round(valence / 4.0, 4)
            subj = subjectivity(valence)
            add(word, pol, subj, valence, "sentiment")
    for table in (POSITIVE, NEGATIVE):
        for word, valence in table.items():
            pol = round(valence / 4.0, 4)
            subj = subjectivity(valence)
            for v in variants(word):
                add(v, pol, subj, valence, "sentiment")
    for word in BOOSTERS_UP:
        add(word, 0.0, 0.0, 0.0, "booster:0.293")
    for word in BOOSTERS_DOWN:
        add(word, 0.0, 0.0, 0.0, "booster:-0.293")
    for word in NEGATORS:
        add(word, 0.0, 0.0, 0.0, "negator")

    with open(out_path, "w", encoding="utf-8") as f:
        f.write("# bundled sentiment lexicon, version=1\n")
        f.write("# token\tpolarity\tsubjectivity\tvalence\tkind\n")
        for token in sorted(rows):
            pol, subj, val, kind = rows[token]
            f.write(f"{token}\t{pol}\t{subj}\t{val}\t{kind}\n")
    print(f"{len(rows)} surface rows -> {out_path}")


if __name__ == "__main__":
    main()
