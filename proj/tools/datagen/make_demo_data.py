#!/usr/bin/env python3
"""Builds the bundled demo data files.

Emits data/embeddings_demo.txt, data/tag_lexicon.tsv and data/ngrams_demo.txt
from the topic clusters and dictionaries below, and verifies that every token
of data/slogans_demo.txt is covered by the lexicon. Deterministic: vector
noise is seeded from an MD5 of the word, never from Python's salted hash().
"""

import hashlib
import math
import re
import sys
from collections import Counter
from pathlib import Path

DATA = Path(__file__).resolve().parents[2] / "data"
DIM = 24
SCALE = 3.0
SECONDARY = 0.4
NOISE = 0.15

# topic -> {pos -> [words]}; pos in {NN, NNS, VB, JJ, RB}
CLUSTERS = {
    "magic": {
        "NN": ["magic", "witchcraft", "wizardry", "sorcery", "spell", "charm",
               "enchantment", "wand", "wizard", "witch", "potion", "mystery",
               "miracle", "wonder", "fantasy", "legend", "myth", "dream",
               "imagination", "dreamer"],
        "NNS": ["spells", "charms", "wonders", "dreams", "legends", "wizards"],
        "VB": ["enchant", "bewitch", "conjure", "inspire", "imagine", "amaze",
               "astonish", "dazzle"],
        "JJ": ["magical", "mystic", "enchanted", "spellbound"],
    },
    "education": {
        "NN": ["education", "school", "teacher", "student", "lesson", "course",
               "knowledge", "wisdom", "skill", "practice", "training", "mind",
               "book", "classroom", "brain", "genius", "talent", "craft",
               "art", "discovery", "language", "inspiration"],
        "NNS": ["minds", "books", "skills", "lessons", "students", "teachers",
                "schools", "ideas"],
        "VB": ["educate", "teach", "learn", "train", "study", "prepare",
               "master", "mentor", "practise", "exercise", "cultivate"],
        "JJ": ["wise", "smart", "clever", "curious", "brilliant"],
    },
    "service": {
        "NN": ["service", "help", "care", "support", "comfort", "promise",
               "trust", "duty", "community", "family", "customer",
               "guest", "neighbor", "kindness", "respect", "welcome",
               "friend", "company", "advice", "safety", "patience"],
        "NNS": ["families", "friends", "others", "customers", "guests",
                "neighbors", "smiles", "welcomes", "hearts"],
        "VB": ["serve", "protect", "share",
               "give", "assist", "deliver", "host"],
        "JJ": ["friendly", "helpful", "kind", "gentle", "honest", "generous"],
    },
    "food": {
        "NN": ["food", "taste", "flavor", "meal", "breakfast", "lunch",
               "dinner", "bread", "pizza", "cheese", "chocolate", "honey",
               "sugar", "spice", "kitchen", "recipe", "bite", "snack",
               "feast", "butter", "soup", "oven", "flour", "appetite",
               "sandwich", "table", "fork", "grandma", "hunger", "goodness"],
        "NNS": ["flavors", "meals", "recipes", "ingredients", "sandwiches",
                "scoops", "bites"],
        "VB": ["eat", "savor", "cook", "bake", "grill", "crave", "feed"],
        "JJ": ["delicious", "tasty", "hungry", "crispy", "sweet", "bland",
               "stale"],
    },
    "drink": {
        "NN": ["coffee", "tea", "juice", "water", "milk", "cup",
               "glass", "bottle", "thirst", "refreshment", "sip", "bean",
               "kettle", "soda", "drop"],
        "NNS": ["drinks", "cups", "beans"],
        "VB": ["drink", "pour", "quench", "toast", "refresh", "brew"],
        "JJ": ["refreshing", "cold", "hot", "smooth", "thirsty"],
    },
    "tech": {
        "NN": ["technology", "innovation", "future", "machine", "computer",
               "science",
               "network", "data", "code", "software", "robot", "engine",
               "tool", "battery", "phone", "screen", "button", "gadget"],
        "NNS": ["machines", "robots", "engines", "tools", "batteries",
                "gadgets", "networks"],
        "VB": ["connect", "compute", "upgrade", "automate", "invent",
               "design", "build", "create", "engineer", "unlock", "press"],
        "JJ": ["digital", "technical", "automatic", "electric", "instant"],
    },
    "money": {
        "NN": ["money", "value", "price", "deal", "business", "market",
               "brand", "success", "wealth", "bank", "profit", "bargain",
               "budget", "wallet", "work", "job"],
        "NNS": ["prices", "deals", "savings", "results", "wealthiness"],
        "VB": ["save", "invest", "earn", "spend", "buy", "sell", "pay",
               "trade", "win", "afford"],
        "JJ": ["rich", "affordable", "cheap", "premium", "valuable"],
    },
    "travel": {
        "NN": ["travel", "journey", "adventure", "road", "world",
               "destination", "flight", "trip", "map", "horizon", "distance",
               "mile", "explorer", "route", "line", "corner", "stop",
               "pack", "wind", "freedom"],
        "NNS": ["roads", "miles", "trips", "maps", "wheels", "travelers"],
        "VB": ["explore", "discover", "wander", "roam", "fly",
               "drive", "ride", "arrive", "depart", "chase", "move", "go",
               "walk", "run", "wear"],
        "JJ": ["wild", "scenic", "foreign"],
    },
    "nature": {
        "NN": ["nature", "earth", "sky", "sun", "moon", "star", "ocean",
               "sea", "mountain", "forest", "river", "garden", "flower",
               "tree", "rain", "sunshine", "sunrise", "planet", "land",
               "field", "hill", "root", "season", "summer", "paradise"],
        "NNS": ["stars", "mountains", "rivers", "gardens", "flowers", "trees",
                "fields", "hills", "roots", "seasons", "plants"],
        "VB": ["grow", "bloom", "flourish", "breathe", "shine", "glow",
               "plant"],
        "JJ": ["natural", "green", "golden", "sunny", "organic"],
    },
    "home": {
        "NN": ["home", "house", "room", "bed", "sleep", "pillow",
               "sofa", "warmth", "blanket", "door", "roof", "window",
               "landing", "alarm", "morning", "night", "evening", "shoe"],
        "NNS": ["homes", "houses", "rooms", "mornings", "nights", "socks",
                "clothes", "shoes", "walks"],
        "VB": ["live", "relax", "unwind", "settle", "stay",
               "wake", "rest"],
        "JJ": ["cozy", "warm", "soft", "comfortable", "quiet", "calm"],
    },
    "strength": {
        "NN": ["quality", "strength", "power", "energy", "performance",
               "speed", "precision", "excellence", "perfection", "steel",
               "balance", "confidence", "courage", "potential", "change",
               "difference", "detail", "step", "finish", "standard",
               "champion", "craftsmanship"],
        "NNS": ["standards", "steps", "details", "champions", "pros",
                "moves"],
        "VB": ["perform", "deliver", "endure", "excel", "empower",
               "accelerate", "push", "lift", "raise", "drive"],
        "JJ": ["strong", "fast", "reliable", "durable", "solid", "tough",
               "bold", "fierce", "powerful", "perfect"],
    },
    "joy": {
        "NN": ["joy", "fun", "happiness", "laughter", "play",
               "party", "celebration", "music", "song", "game",
               "pleasure", "cheer", "memory", "moment", "passion",
               "spirit", "love", "heart", "victory", "applause",
               "feeling", "sound"],
        "NNS": ["songs", "games", "memories", "moments"],
        "VB": ["enjoy", "smile", "laugh", "celebrate", "dance",
               "sing", "delight", "entertain"],
        "JJ": ["happy", "joyful", "playful", "cheerful", "merry", "glad"],
    },
    "health": {
        "NN": ["health", "beauty", "skin", "hair", "fitness", "wellness",
               "vitamin", "medicine", "doctor", "body", "heartbeat",
               "breath", "feet", "foot"],
        "NNS": ["vitamins", "muscles", "bones", "hands"],
        "VB": ["heal", "nourish", "strengthen", "revive", "renew", "restore",
               "recharge", "exercise", "stretch"],
        "JJ": ["healthy", "beautiful", "fresh", "clean", "pure", "fit",
               "bright", "gentle"],
    },
    "clean": {
        "NN": ["soap", "sparkle", "freshness", "laundry", "dirt",
               "grease", "clutter", "noise", "fuss", "mess", "stitch"],
        "NNS": ["bubbles", "stitches"],
        "VB": ["wash", "scrub", "polish", "shine", "wipe", "rinse",
               "squeak"],
        "JJ": ["spotless", "tidy", "crisp", "clear"],
    },
    "generic": {
        "NN": ["life", "day", "time", "story", "way", "thing", "idea",
               "choice", "word", "name", "question", "beginning",
               "reason", "start", "end", "side", "place", "everything",
               "something", "nothing", "everyone", "anything", "everybody",
               "mission", "vision", "goal", "tradition", "original",
               "routine", "luxury", "secret", "simplicity", "style",
               "stuff", "tomorrow", "chance", "box", "minute", "reach"],
        "NNS": ["days", "times", "stories", "ways", "things",
                "choices", "words", "names", "questions", "answers",
                "people", "generations", "batches", "shortcuts", "regrets",
                "expectations", "worries", "problems", "faces", "believers",
                "dreamers", "ones"],
        "VB": ["make", "take", "keep", "find", "follow", "bring", "turn",
               "put", "get", "let", "come", "leave", "open", "close", "hold",
               "catch", "cut", "skip", "add", "miss", "settle", "answer",
               "call", "say", "see", "know", "think", "feel", "want",
               "need", "begin", "become", "try", "use", "mean",
               "matter", "count", "repeat", "include", "exclude", "beat",
               "dare", "grab", "own", "embrace", "wait"],
        "JJ": ["new", "old", "good", "great", "best", "better", "big",
               "small", "little", "long", "short", "young", "real", "true",
               "simple", "modern", "classic", "ordinary", "different",
               "single", "whole", "busy", "hard", "easy", "ready", "right",
               "wrong", "free", "full", "endless", "soft", "loud", "tall",
               "low", "high", "wide", "deep", "early", "late", "next",
               "last", "first", "second", "third", "boring", "wonderful",
               "worth", "usual", "wealthy", "advanced", "bad", "slow",
               "light"],
        "RB": ["always", "never", "often", "together", "everywhere",
               "anywhere", "somewhere", "today", "tonight", "forever",
               "daily", "everyday"],
    },
}

# Secondary topic memberships for words that straddle topics.
SECONDARY_TOPIC = {
    "comfort": "home", "care": "health", "refresh": "health",
    "warmth": "service", "welcome": "joy", "family": "home",
    "morning": "drink", "bread": "service", "coffee": "joy",
    "practice": "magic", "exercise": "education", "brain": "tech",
    "mind": "magic", "minds": "magic", "wisdom": "magic",
    "genius": "magic", "energy": "health", "glow": "nature",
    "shine": "nature", "dream": "joy", "dreams": "joy",
    "imagination": "education", "inspire": "joy", "discover": "education",
    "explore": "education", "wonder": "joy", "story": "joy",
    "memory": "home", "create": "magic", "craft": "home",
    "victory": "strength", "deliver": "travel", "move": "strength",
    "work": "strength", "machines": "strength", "engine": "travel",
    "engines": "travel",
}

# Function words and corpus-specific forms not derivable from the clusters.
EXTRA_LEXICON = {
    # determiners, pronouns, conjunctions, prepositions
    "the": "DT", "a": "DT", "an": "DT", "every": "DT", "each": "DT",
    "all": "DT", "some": "DT", "any": "DT", "no": "DT", "this": "DT",
    "that": "DT", "these": "DT", "those": "DT", "another": "DT",
    "and": "CC", "or": "CC", "but": "CC", "nor": "CC", "yet": "CC",
    "of": "IN", "in": "IN", "on": "IN", "at": "IN", "for": "IN",
    "from": "IN", "with": "IN", "by": "IN", "as": "IN", "into": "IN",
    "over": "IN", "under": "IN", "through": "IN", "against": "IN",
    "around": "IN", "beyond": "IN", "within": "IN", "without": "IN",
    "per": "IN", "like": "IN", "than": "IN", "since": "IN", "until": "IN",
    "above": "IN", "below": "IN", "behind": "IN", "ahead": "RB",
    "because": "IN", "if": "IN", "when": "WRB", "where": "WRB",
    "why": "WRB", "how": "WRB", "while": "IN", "after": "IN",
    "before": "IN", "out": "IN", "to": "TO",
    "it": "PRP", "you": "PRP", "we": "PRP", "they": "PRP", "he": "PRP",
    "she": "PRP", "i": "PRP", "me": "PRP", "us": "PRP", "them": "PRP",
    "your": "PRP$", "our": "PRP$", "my": "PRP$", "their": "PRP$",
    "its": "PRP$", "his": "PRP$", "her": "PRP$", "everyone's": "PRP$",
    "who": "WP", "what": "WP", "which": "WDT",
    "there": "EX", "here": "RB",
    "one": "CD", "two": "CD", "three": "CD", "once": "RB",
    "yes": "UH", "oh": "UH",
    # auxiliaries and common verb forms
    "is": "VBZ", "are": "VBP", "was": "VBD", "were": "VBD", "be": "VB",
    "been": "VBN", "being": "VBG", "am": "VBP",
    "has": "VBZ", "have": "VBP", "had": "VBD",
    "does": "VBZ", "do": "VB", "did": "VBD", "done": "VBN",
    "can": "MD", "will": "MD", "should": "MD", "would": "MD",
    "could": "MD", "may": "MD", "must": "MD",
    "got": "VBD", "gets": "VBZ", "goes": "VBZ", "comes": "VBZ",
    "says": "VBZ", "tastes": "VBZ", "starts": "VBZ", "tells": "VBZ",
    "works": "VBZ", "deserves": "VBZ", "becomes": "VBZ", "meets": "VBZ",
    "fits": "VBZ", "sounds": "VBZ", "feels": "VBZ", "makes": "VBZ",
    "squeaks": "VBZ", "matters": "VBZ", "beats": "VBZ", "takes": "VBZ",
    "needs": "VBZ", "calls": "VBZ", "lives": "VBZ", "hurt": "VB",
    "puts": "VBZ", "turns": "VBZ", "grows": "VBZ", "wear": "VB",
    "made": "VBN", "built": "VBN", "born": "VBN", "designed": "VBN",
    "crafted": "VBN", "powered": "VBN", "driven": "VBN", "inspired": "VBN",
    "brewed": "VBN", "baked": "VBN", "grown": "VBN", "included": "VBN",
    "excluded": "VBN", "handmade": "JJ", "homemade": "JJ",
    "waiting": "NN", "living": "NN", "thinking": "NN", "baking": "NN",
    "sharing": "NN", "brewing": "VBG", "connecting": "VBG",
    "floating": "VBG", "singing": "VBG", "doing": "VBG",
    # adverbs and adjectives scattered through the corpus
    "now": "RB", "just": "RB", "only": "RB", "too": "RB", "very": "RB",
    "so": "RB", "not": "RB", "again": "RB", "away": "RB", "also": "RB",
    "still": "RB", "almost": "RB", "enough": "RB", "even": "RB",
    "really": "RB", "truly": "RB", "simply": "RB", "absolutely": "RB",
    "probably": "RB", "officially": "RB", "seriously": "RB",
    "surprisingly": "RB", "ridiculously": "RB", "deliciously": "RB",
    "refreshingly": "RB", "unmistakably": "RB", "proudly": "RB",
    "quietly": "RB", "overnight": "RB", "far": "RB", "well": "RB",
    "ends": "VBZ", "up": "RP",
    "off": "RP", "down": "RP",
    "more": "JJR", "less": "JJR", "most": "JJS", "fewer": "JJR",
    "bigger": "JJR", "wider": "JJR", "brighter": "JJR", "louder": "JJR",
    "lighter": "JJR", "smaller": "JJR", "smarter": "JJR", "softer": "JJR",
    "softest": "JJS", "freshest": "JJS", "coziest": "JJS",
    "further": "RBR", "harder": "RBR", "closer": "RBR", "faster": "RBR",
    "longer": "RBR", "higher": "RBR",
    "righteous": "JJ", "sheer": "JJ", "crazy": "JJ", "favorite": "JJ",
    "natural": "JJ", "welcome": "NN", "mouth": "NN", "hands": "NNS",
    "land": "NN", "bar": "NN", "haul": "NN", "pocket": "NN", "peace": "NN",
    "guilt": "NN", "worry": "NN", "tires": "NNS", "tire": "NN",
    "grandma": "NN", "feast": "NN", "alive": "JJ", "asleep": "JJ",
    "awake": "JJ",
}

WORD_RE = re.compile(r"[A-Za-z0-9][A-Za-z0-9'’-]*")

CURATED_NGRAMS = [
    "of the", "in the", "to the", "for the", "on the", "at the", "and the",
    "with the", "from the", "by the", "in your", "for your", "of your",
    "on your", "to your", "in a", "of a", "for a", "with a", "a little",
    "you can", "you are", "we are", "it is", "this is", "that is",
    "there is", "the best", "the world", "the future", "the first",
    "the only", "a better", "your life", "your home", "your family",
    "every day", "all day", "one of", "out of", "more than", "at home",
    "the taste of", "the power of", "the art of", "the magic of",
    "the end of", "the best of", "in your mouth", "of the day",
    "for the best", "you can trust", "at the end", "one of a",
    "the rest of", "a lot of", "out of the", "the way you",
    "in the world", "the land of", "milk and honey", "bread and butter",
    "day and night", "now and then", "here and there", "time and time",
]


def corpus_tokens(line):
    return [w.lower() for w in WORD_RE.findall(line)]


def build_lexicon():
    lexicon = {}

    def put(word, tag):
        prior = lexicon.get(word)
        if prior is not None and prior != tag:
            raise SystemExit(f"tag conflict for '{word}': {prior} vs {tag}")
        lexicon[word] = tag

    for topic in CLUSTERS.values():
        for pos, words in topic.items():
            for word in words:
                put(word, pos)
    for word, tag in EXTRA_LEXICON.items():
        put(word, tag)
    return lexicon


def vector_for(word, topic_index, topic_count, secondary_index):
    digest = hashlib.md5(word.encode("utf-8")).digest()
    noise = []
    state = int.from_bytes(digest, "big")
    for _ in range(DIM):
        state = (state * 6364136223846793005 + 1442695040888963407) % (1 << 64)
        noise.append(((state >> 16) % 10_000) / 10_000.0 * 2 * NOISE - NOISE)

    direction = [0.0] * DIM
    direction[topic_index] = 1.0
    if secondary_index is not None:
        direction[secondary_index] = SECONDARY
    norm = math.sqrt(sum(x * x for x in direction))
    vec = [SCALE * x / norm + n for x, n in zip(direction, noise)]
    return vec


def main():
    lexicon = build_lexicon()

    topics = list(CLUSTERS.keys())
    topic_index = {t: i for i, t in enumerate(topics)}
    if len(topics) > DIM:
        raise SystemExit("more topics than dimensions")

    # Primary topic per word: first cluster that lists it.
    primary = {}
    for topic, groups in CLUSTERS.items():
        for words in groups.values():
            for word in words:
                primary.setdefault(word, topic)

    vocab = sorted(primary)
    embedding_lines = [f"{len(vocab)} {DIM}"]
    for word in vocab:
        sec = SECONDARY_TOPIC.get(word)
        sec_index = topic_index[sec] if sec and sec != primary[word] else None
        vec = vector_for(word, topic_index[primary[word]], len(topics),
                         sec_index)
        embedding_lines.append(
            word + " " + " ".join(f"{x:.6f}" for x in vec))
    (DATA / "embeddings_demo.txt").write_text(
        "\n".join(embedding_lines) + "\n", encoding="utf-8")

    lexicon_lines = ["# word<TAB>PENN_TAG, one most-frequent tag per word."]
    for word in sorted(lexicon):
        lexicon_lines.append(f"{word}\t{lexicon[word]}")
    (DATA / "tag_lexicon.tsv").write_text(
        "\n".join(lexicon_lines) + "\n", encoding="utf-8")

    # Coverage check over the demo corpus.
    corpus_path = DATA / "slogans_demo.txt"
    missing = Counter()
    bigrams = Counter()
    trigrams = Counter()
    for line in corpus_path.read_text(encoding="utf-8").splitlines():
        words = corpus_tokens(line)
        for word in words:
            if word not in lexicon:
                missing[word] += 1
        for i in range(len(words) - 1):
            bigrams[" ".join(words[i:i + 2])] += 1
        for i in range(len(words) - 2):
            trigrams[" ".join(words[i:i + 3])] += 1

    ngram_lines = ["# demo surface n-grams: corpus-frequent plus curated"]
    chosen = sorted(g for g, c in bigrams.items() if c >= 2)
    chosen += sorted(g for g, c in trigrams.items() if c >= 2)
    seen = set(chosen)
    for gram in CURATED_NGRAMS:
        if gram not in seen:
            chosen.append(gram)
            seen.add(gram)
    ngram_lines.extend(chosen)
    (DATA / "ngrams_demo.txt").write_text(
        "\n".join(ngram_lines) + "\n", encoding="utf-8")

    print(f"lexicon entries: {len(lexicon)}")
    print(f"embedding vocab: {len(vocab)} (dim {DIM})")
    print(f"ngram lines: {len(chosen)}")
    if missing:
        print("\nMISSING from lexicon:")
        for word, count in missing.most_common():
            print(f"  {word} ({count})")
        return 1
    print("corpus fully covered by lexicon")
    return 0


if __name__ == "__main__":
    sys.exit(main())
