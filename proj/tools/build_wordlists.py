#!/usr/bin/env python3
"""Regenerate the bundled word lists and unigram model under data/.

Requires: pip install wordfreq english-words
The outputs are committed; rerun only to refresh them.
"""
import re
import sys
from pathlib import Path

from english_words import get_english_words_set
from wordfreq import top_n_list, word_frequency

OUT = Path(__file__).resolve().parent.parent / "data"
TOKEN = re.compile(r"^[a-z0-9]+$")

# Brand names that show up in web frequency lists but are not English words.
BRANDS = {
    "facebook", "google", "youtube", "paypal", "twitter", "instagram", "netflix",
    "yahoo", "amazon", "ebay", "microsoft", "adobe", "dropbox", "icloud", "skype",
    "mozilla", "reuters", "wikipedia", "craigslist", "costco", "chevron", "imdb",
    "nytimes", "tumblr", "comcast", "blogspot", "expedia", "fedex", "airbnb",
    "wordpress", "linkedin", "pinterest", "reddit", "walmart", "bankofamerica",
    "iphone", "ipad", "gmail", "hotmail", "youporn", "norton", "spotify", "uber",
}

PROFANITY = """
anal anus arse ass asshole bastard bitch bollocks boob boobs butt cock crap cum
cunt damn dick dildo douche fag fuck fucked fucker fucking goddamn hell horny jerk
milf nude nudes orgasm penis piss porn porno pussy sex sexy shit slut tits twat
wank whore xxx
""".split()

SLANG = """
bae bro brb btw cuz dope fam fyi gonna gotta idk imo kinda lol lmao luv noob
omg pls plz selfie swag thx tho u ur wanna wassup yolo ya yall yeah yep nah
cool hottie bling fab xoxo haha app apps emo
""".split()


def main() -> int:
    web = get_english_words_set(["web2", "gcide"], lower=True, alpha=True)
    top = [w for w in top_n_list("en", 60000) if TOKEN.match(w)]

    with open(OUT / "unigrams.tsv", "w") as f:
        f.write("# token\tcount (scaled web frequency)\n")
        for w in top[:50000]:
            c = max(1, round(word_frequency(w, "en") * 1e9))
            f.write(f"{w}\t{c}\n")

    def stem_known(w: str) -> bool:
        if w in web:
            return True
        for suf in ("s", "es", "ed", "ing", "er", "ers", "ly"):
            if w.endswith(suf) and w[: -len(suf)] in web:
                return True
        return False

    english = sorted({w for w in top if w.isalpha() and w not in BRANDS and stem_known(w)})
    scrabble = sorted({w for w in web if 2 <= len(w) <= 8 and w not in BRANDS}
                      & set(top_n_list("en", 200000)))
    for name, words in (("english", english), ("profanity", sorted(set(PROFANITY))),
                        ("scrabble", scrabble), ("slang", sorted(set(SLANG)))):
        (OUT / "dict" / f"{name}.txt").write_text("\n".join(words) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
