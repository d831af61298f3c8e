#!/usr/bin/env python3
"""Generate the end-to-end fixture: a Gutenberg-style novel and a matching synthetic lexicon.

The novel is built from a fixed seed so the checked-in files are reproducible:
  tests/fixtures/novel/the_lantern_road.txt   (~300 KB, BOM + CRLF, "CHAPTER N." headings)
  tests/fixtures/novel/vad_synthetic.tsv      (header, ~120 unigrams, 2 phrases)

Chapter 7 contains no dialogue at all; chapter 12 contains one paragraph whose opening
quote is never closed (a continuation-style quote).
"""
import pathlib
import random

SEED = 20251016
ROOT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "novel"

NAMES = ["Ada", "Corwin", "Mabel", "Tobias", "Wren", "Ishmael", "Hester", "Gideon"]
PLACES = ["the mill", "the ridge", "the harbour", "the old road", "the fen", "the tower",
          "the orchard", "the ferry", "the market", "the chapel"]

# word -> (valence, arousal, dominance), all in [0,1]
LEXICON = {
    "good": (0.89, 0.42, 0.64), "time": (0.56, 0.39, 0.52), "home": (0.91, 0.29, 0.61),
    "friend": (0.92, 0.41, 0.63), "friends": (0.91, 0.43, 0.62), "light": (0.82, 0.37, 0.58),
    "dark": (0.22, 0.56, 0.38), "danger": (0.12, 0.88, 0.35), "fear": (0.07, 0.84, 0.25),
    "afraid": (0.10, 0.78, 0.19), "brave": (0.86, 0.72, 0.85), "joy": (0.95, 0.60, 0.55),
    "glad": (0.90, 0.52, 0.60), "sorrow": (0.09, 0.45, 0.22), "lost": (0.14, 0.52, 0.23),
    "found": (0.74, 0.48, 0.60), "road": (0.55, 0.40, 0.50), "river": (0.64, 0.36, 0.47),
    "storm": (0.27, 0.87, 0.53), "fire": (0.40, 0.89, 0.66), "warm": (0.86, 0.33, 0.55),
    "cold": (0.26, 0.44, 0.39), "bread": (0.78, 0.24, 0.44), "supper": (0.81, 0.30, 0.48),
    "gold": (0.81, 0.67, 0.79), "thief": (0.10, 0.73, 0.45), "trust": (0.90, 0.37, 0.72),
    "lie": (0.11, 0.59, 0.39), "truth": (0.86, 0.43, 0.76), "hope": (0.93, 0.53, 0.66),
    "despair": (0.06, 0.67, 0.16), "quiet": (0.66, 0.09, 0.45), "loud": (0.37, 0.82, 0.61),
    "hurry": (0.38, 0.83, 0.51), "rest": (0.83, 0.10, 0.44), "sleep": (0.80, 0.05, 0.30),
    "wolves": (0.19, 0.82, 0.53), "wolf": (0.25, 0.79, 0.60), "lantern": (0.68, 0.33, 0.51),
    "night": (0.47, 0.40, 0.45), "morning": (0.83, 0.43, 0.56), "sun": (0.88, 0.55, 0.63),
    "rain": (0.52, 0.34, 0.38), "laugh": (0.94, 0.73, 0.63), "weep": (0.13, 0.58, 0.21),
    "king": (0.74, 0.62, 0.93), "master": (0.60, 0.55, 0.91), "free": (0.92, 0.54, 0.78),
    "trapped": (0.08, 0.78, 0.15), "shut": (0.30, 0.40, 0.41), "open": (0.75, 0.46, 0.62),
    "win": (0.94, 0.81, 0.89), "fight": (0.23, 0.91, 0.74), "strong": (0.79, 0.64, 0.90),
    "weak": (0.17, 0.25, 0.11), "safe": (0.88, 0.15, 0.60), "terrible": (0.04, 0.81, 0.33),
    "wonderful": (0.97, 0.72, 0.70), "treasure": (0.88, 0.69, 0.73), "curse": (0.06, 0.78, 0.45),
    "merry": (0.93, 0.68, 0.61), "feast": (0.87, 0.64, 0.62), "song": (0.86, 0.50, 0.54),
    "grave": (0.10, 0.35, 0.32), "tired": (0.26, 0.12, 0.20), "hungry": (0.28, 0.50, 0.27),
    "not": (0.26, 0.35, 0.38), "mountain": (0.70, 0.45, 0.67), "journey": (0.76, 0.63, 0.64),
    "promise": (0.85, 0.47, 0.69), "ready": (0.75, 0.60, 0.73), "wait": (0.38, 0.23, 0.35),
    "listen": (0.69, 0.31, 0.55), "quickly": (0.55, 0.73, 0.61), "careful": (0.62, 0.49, 0.66),
    "dead": (0.03, 0.59, 0.25), "alive": (0.91, 0.72, 0.70), "help": (0.83, 0.53, 0.59),
    "blood": (0.11, 0.79, 0.50), "door": (0.52, 0.26, 0.47), "key": (0.61, 0.41, 0.63),
    "bridge": (0.63, 0.37, 0.56), "ship": (0.64, 0.51, 0.60), "sea": (0.77, 0.47, 0.55),
    "shadow": (0.30, 0.47, 0.41), "ghost": (0.19, 0.70, 0.38), "letter": (0.60, 0.35, 0.50),
    "mother": (0.92, 0.45, 0.63), "father": (0.86, 0.44, 0.72), "child": (0.86, 0.49, 0.36),
    "old": (0.41, 0.21, 0.42), "young": (0.81, 0.61, 0.56), "kind": (0.91, 0.35, 0.61),
    "cruel": (0.06, 0.77, 0.68), "angry": (0.12, 0.89, 0.64), "calm": (0.83, 0.06, 0.62),
    "certain": (0.70, 0.38, 0.78), "strange": (0.35, 0.60, 0.39), "careless": (0.22, 0.49, 0.38),
    "money": (0.80, 0.63, 0.82), "work": (0.55, 0.50, 0.58), "pay": (0.49, 0.49, 0.60),
    "sword": (0.42, 0.78, 0.82), "village": (0.70, 0.30, 0.50), "cottage": (0.83, 0.21, 0.52),
    "tea": (0.80, 0.16, 0.47), "garden": (0.89, 0.22, 0.56), "snow": (0.70, 0.32, 0.43),
    "winter": (0.47, 0.34, 0.45), "spring": (0.91, 0.55, 0.60), "precious": (0.83, 0.56, 0.62),
}
PHRASES = {"out of sorts": (0.21, 0.44, 0.30), "at ease": (0.85, 0.08, 0.62)}

# Chapter moods steer which emotional words dominate the dialogue.
POSITIVE = ["good", "home", "friend", "friends", "light", "joy", "glad", "warm", "bread", "supper",
            "trust", "truth", "hope", "rest", "laugh", "merry", "feast", "song", "safe",
            "wonderful", "kind", "garden", "tea", "spring", "free", "alive", "morning", "sun"]
NEGATIVE = ["dark", "danger", "fear", "afraid", "sorrow", "lost", "storm", "cold", "thief", "lie",
            "despair", "wolves", "weep", "trapped", "shut", "terrible", "curse", "grave", "dead",
            "blood", "ghost", "cruel", "angry", "shadow", "hungry", "tired"]
NEUTRAL = ["time", "road", "river", "gold", "lantern", "night", "rain", "king", "master", "mountain",
           "journey", "promise", "ready", "wait", "listen", "quickly", "careful", "door", "key",
           "bridge", "ship", "sea", "letter", "mother", "father", "child", "old", "young",
           "certain", "strange", "money", "work", "pay", "sword", "village", "cottage", "snow",
           "winter", "fight", "win", "strong", "weak", "open", "help", "treasure", "precious"]
FILLER = ["the", "a", "we", "you", "it", "is", "was", "and", "but", "of", "to", "in", "on",
          "there", "here", "must", "shall", "would", "could", "may", "come", "go", "said",
          "with", "all", "this", "that", "they", "our", "my", "your", "at", "by", "now", "then",
          "lamplighter", "porridge", "weather-vane", "wheelbarrow", "o'clock", "twelve", "1843"]
CONTRACTIONS = ["don't", "can't", "won't", "isn't", "wasn't", "couldn't", "shan't", "ain't",
                "didn't", "I'm", "we'll", "you've", "they're", "it's", "that's", "cannot",
                "don’t", "won’t", "I’ll"]
NARRATION = ["The wind turned over the hedges and went muttering down toward {place}.",
             "{name} set the lantern on the sill and looked out at {place} for a long while.",
             "Nobody spoke for some minutes; the kettle ticked as it cooled.",
             "They walked on past {place}, where the ruts were full of brown water.",
             "It was late in the afternoon when the carts came back from {place}.",
             "{name} counted the coins twice and put them away in a tin box.",
             "Somewhere beyond {place} a dog barked, and then thought better of it.",
             "The fire had burned low, and the room smelt of wet wool and apples.",
             "{name} had not slept well, and the grey light did nothing to mend it.",
             "There was a chapter of the old story that {name} never told to anyone."]
TAGS = ["said {name}", "{name} answered", "cried {name}", "{name} whispered",
        "{name} said quietly", "asked {name}", "{name} replied at last"]
TITLES = ["The Lamp in the Window", "A Letter from the Ferry", "Wolves at the Fen",
          "Supper at the Mill", "The Storm Breaks", "Lost on the Ridge", "The Long Silence",
          "A Merry Meeting", "The Thief in the Orchard", "Fire and Water", "The Tower Key",
          "A Voice Without End", "Bread and Honey", "The Ghost of the Chapel", "Market Day",
          "A Cold Crossing", "The Bargain", "Gold Under the Floor", "The Return", "Spring Again"]


def mood_words(rng, chapter):
    # A fixed mood schedule gives clear peaks and troughs.
    mood = [1, 0, -1, 1, -1, -1, 0, 1, -1, 0, 0, -1, 1, -1, 0, -1, 0, 1, 1, 1][chapter - 1]
    pools = {1: POSITIVE * 3 + NEUTRAL + NEGATIVE, 0: POSITIVE + NEUTRAL * 2 + NEGATIVE,
             -1: NEGATIVE * 3 + NEUTRAL + POSITIVE}
    return pools[mood]


def sentence(rng, pool):
    n = rng.randint(4, 12)
    words = []
    for _ in range(n):
        r = rng.random()
        if r < 0.45:
            words.append(rng.choice(FILLER))
        elif r < 0.55:
            words.append(rng.choice(CONTRACTIONS))
        else:
            words.append(rng.choice(pool))
    words[0] = words[0][0].upper() + words[0][1:]
    if rng.random() < 0.2:
        words.insert(rng.randint(1, len(words) - 1), "'" + rng.choice(pool) + "'")
    if rng.random() < 0.15:
        words.append(rng.choice(NAMES) + "'s")
    end = rng.choice([".", "!", "?", "...", "!—"])
    return " ".join(words) + end


def quote(rng, text, typographic):
    return ("“" + text + "”") if typographic else ('"' + text + '"')


def dialogue_paragraph(rng, pool):
    name = rng.choice(NAMES)
    typographic = rng.random() < 0.5
    first = sentence(rng, pool)
    tag = rng.choice(TAGS).format(name=name)
    if rng.random() < 0.5:
        second = sentence(rng, pool)
        return (quote(rng, first[:-1] + ",", typographic) + " " + tag + ". " +
                quote(rng, second, typographic))
    return quote(rng, first, typographic) + " " + tag + "."


def narration_paragraph(rng):
    lines = []
    for _ in range(rng.randint(2, 5)):
        lines.append(rng.choice(NARRATION).format(name=rng.choice(NAMES), place=rng.choice(PLACES)))
    return " ".join(lines)


def wrap(paragraph, width=72):
    out, line = [], ""
    for word in paragraph.split(" "):
        if line and len(line) + 1 + len(word) > width:
            out.append(line)
            line = word
        else:
            line = word if not line else line + " " + word
    if line:
        out.append(line)
    return "\n".join(out)


def build():
    rng = random.Random(SEED)
    parts = ["The Lantern Road", "", "A Novel", "", "by E. M. Holloway", "",
             "This fixture text was generated for testing and is dedicated to the public domain.",
             "", "CONTENTS", ""]
    for i, title in enumerate(TITLES, 1):
        parts.append(f"   {i}. {title}")
    parts += ["", ""]
    body = "\n".join(parts)

    for ch, title in enumerate(TITLES, 1):
        pool = mood_words(rng, ch)
        paras = [f"CHAPTER {ch}. {title.upper()}", ""]
        target = 14500
        size = 0
        while size < target:
            if ch == 7 or rng.random() < 0.35:
                p = narration_paragraph(rng)
            else:
                p = dialogue_paragraph(rng, pool)
            w = wrap(p)
            paras += [w, ""]
            size += len(w) + 2
        if ch == 12:
            # Continuation-style quote: the paragraph opens speech that never closes.
            paras += [wrap("“And if the lantern goes out before we reach the ferry, you must "
                           "keep walking and not look back at the dark water, for it is cold and "
                           "it is patient,"), ""]
            paras += [wrap(narration_paragraph(rng)), ""]
        body += "\n".join(paras) + "\n"

    body += "\nTHE END\n"
    return body


def main():
    ROOT.mkdir(parents=True, exist_ok=True)
    text = build()
    data = "﻿" + text.replace("\n", "\r\n")
    (ROOT / "the_lantern_road.txt").write_bytes(data.encode("utf-8"))

    rows = ["term\tvalence\tarousal\tdominance"]
    for term in sorted(LEXICON):
        v, a, d = LEXICON[term]
        rows.append(f"{term}\t{v:.3f}\t{a:.3f}\t{d:.3f}")
    for term, (v, a, d) in sorted(PHRASES.items()):
        rows.append(f"{term}\t{v:.3f}\t{a:.3f}\t{d:.3f}")
    (ROOT / "vad_synthetic.tsv").write_text("\n".join(rows) + "\n", encoding="utf-8")
    print(f"novel: {len(data.encode('utf-8'))} bytes, lexicon: {len(rows) - 1} rows")


if __name__ == "__main__":
    main()
