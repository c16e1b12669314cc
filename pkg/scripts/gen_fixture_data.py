#!/usr/bin/env python3
"""Regenerate packaged lexicon wordlists and the test fixture corpus.

Outputs are committed; rerunning must be byte-stable (fixed seed, sorted
wordlists). Romanized Hindi forms are produced by the package's own
transliterator so language identification agrees with pipeline output.
"""

import json
import random
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from cmxkit.translit import TranslitTable, transliterate_line

VOCAB = [
    ("मैं", "i"), ("तुम", "you"), ("वह", "he"), ("हम", "we"), ("यह", "this"),
    ("घर", "house"), ("पानी", "water"), ("किताब", "book"), ("लड़का", "boy"), ("लड़की", "girl"),
    ("खाना", "food"), ("अच्छा", "good"), ("बड़ा", "big"), ("छोटा", "small"), ("नया", "new"),
    ("पुराना", "old"), ("आदमी", "man"), ("औरत", "woman"), ("बच्चा", "child"), ("शहर", "city"),
    ("गाँव", "village"), ("देश", "country"), ("दिन", "day"), ("रात", "night"), ("समय", "time"),
    ("साल", "year"), ("काम", "work"), ("पैसा", "money"), ("दोस्त", "friend"), ("परिवार", "family"),
    ("सड़क", "road"), ("गाड़ी", "car"), ("खिड़की", "window"), ("दरवाज़ा", "door"), ("कुत्ता", "dog"),
    ("बिल्ली", "cat"), ("चिड़िया", "bird"), ("पेड़", "tree"), ("फूल", "flower"), ("फल", "fruit"),
    ("दूध", "milk"), ("चाय", "tea"), ("रोटी", "bread"), ("बाज़ार", "market"), ("दुकान", "shop"),
    ("क़लम", "pen"), ("काग़ज़", "paper"), ("रंग", "color"), ("स्कूल", "school"), ("नमस्ते", "hello"),
    ("है", "is"), ("हैं", "are"), ("था", "was"), ("और", "and"), ("लेकिन", "but"),
    ("में", "inside"), ("पर", "upon"), ("से", "from"), ("को", "to"), ("का", "of"),
    ("अब", "now"), ("यहाँ", "here"), ("वहाँ", "there"), ("बहुत", "very"), ("थोड़ा", "little"),
    ("जाता", "goes"), ("आता", "comes"), ("करता", "does"), ("देखता", "sees"), ("खाता", "eats"),
    ("पीता", "drinks"), ("रहता", "lives"), ("पढ़ता", "reads"), ("लिखता", "writes"), ("सोता", "sleeps"),
    ("खेलता", "plays"), ("चलता", "walks"), ("बोलता", "speaks"), ("सुनता", "listens"), ("मिलता", "meets"),
]

ENGLISH_WORDS = """
a about after again all also always an and any are around as ask at away
back bad be became because been before best better between big bird blood book
boy bread brother but buy by call came can car cat child children city clean
close cold color come comes could country day did do does dog done door down
drink drinks each eat eats end even every family far fast father few find
first flower food for found friend friends from fruit full game gave get girl
give go goes good got great guess had happy has have he hello help her here
him his home hot house how i if inside into is it its just keep kind know
large last left less let life like listen listens little live lives long look
lot love made make man many market may me meet meets milk missing money
more morning most mother motivates much must my name near need never new next
night no not now of off old on once one only open or other our out over own
paper part pen people place play plays put rain read reads reviews right road
room run said same saw say school see sees she shop should since sister sleep
sleeps small so some song soon sorrow speak speaks still stop street such sure
take talk tea tell than that the their them then there these they thin thing
think this those three time to today together too took tree two under until
up upon us use very village walk walks want was water way we week well went
were what when where which while who why will window with woman work world
would write writes year years yes you your
""".split()

HINGLISH_EXTRA = """
bhai yaar nahi nahin kya kyun kyon haan ji accha achha theek thik hai hain
tha thi ho hoon hun hua hui hue na mat aur lekin magar phir fir kab kahan
kahaan yahan yahaan wahan wahaan kaise kaisa kaisi aise aisa aisi waise waisa
bas bohot bahut bahot zaroorat zarurat kaafi kafi milta milti milte baat
baaton baatein mein mujhe mujhko tujhe tum tumhe aap apna apni apne hum ham
humko woh voh vah yeh yah ye mera meri mere tera teri tere uska uski uske
iska iski sab sabko kuch kuchh koi jab tab toh gaya gayi gaye raha rahi rahe
karna karta karti karte karo kar kiya kiye hota hoti hote hoga hogi dena dete
deta diya lena leta lete liya jana jaana jao jaata jaati jaate aana aata aati
aate aao aaya aayi dekhna dekho dekha dekhta sunna suno suna sunta bolna bolo
bola bolta kehna kaha kahta pyaar pyar dil zindagi dost ghar paani pani khana
khaana roti chai chaay doodh dudh kitaab kitab ladka ladki gaon shahar sheher
desh din raat samay saal kaam paisa paise sadak gaadi khidki darwaza kutta
billi chidiya ped phool phal bazaar dukaan dukan kalam kagaz rang protsahan
zaroori matlab shukriya dhanyavaad namaste gam gham kho khoon patla hogaya
hogayi bhi hi ki ke ka ko se par tak wala wale wali
""".split()

OTHER_POOL = ["@user1", "@raj_22", "#news", "#cricket", ":)", ":(", ":D", "<3"]


def main():
    table = TranslitTable.default()
    roman = {deva: transliterate_line(deva, table) for deva, _ in VOCAB}

    hindi_forms = sorted(set(roman.values()) | set(HINGLISH_EXTRA))
    english_forms = sorted(set(w.lower() for w in ENGLISH_WORDS))
    overlap = set(hindi_forms) & set(english_forms)
    if overlap:
        raise SystemExit(f"wordlist overlap, curate it away: {sorted(overlap)}")

    data_dir = ROOT / "src" / "cmxkit" / "data"
    (data_dir / "english_words.txt").write_text("\n".join(english_forms) + "\n", "utf-8")
    (data_dir / "hindi_roman_words.txt").write_text("\n".join(hindi_forms) + "\n", "utf-8")

    rng = random.Random(20240917)
    lines = []
    for k in range(200):
        domain = "wmt" if k < 50 else "iitb"
        if k % 9 == 3:
            n = rng.randint(3, 6)
        elif k % 9 == 7:
            n = rng.randint(15, 20)
        else:
            n = rng.randint(7, 14)
        idx = [rng.randrange(len(VOCAB)) for _ in range(n)]
        hi_tokens = [VOCAB[i][0] for i in idx]
        en_tokens = [VOCAB[i][1] for i in idx]
        if k % 10 == 4:
            extra = rng.choice(OTHER_POOL)
            hi_tokens.append(extra)
            en_tokens.append(extra)
        lines.append(json.dumps({
            "id": f"r{k:04d}",
            "hi_deva": " ".join(hi_tokens),
            "en": " ".join(en_tokens),
            "domain": domain,
        }, ensure_ascii=False))

    fixture = ROOT / "tests" / "fixtures" / "corpus_200.jsonl"
    fixture.write_text("\n".join(lines) + "\n", "utf-8")
    print(f"english words: {len(english_forms)}")
    print(f"hindi forms:   {len(hindi_forms)}")
    print(f"fixture lines: {len(lines)} -> {fixture}")


if __name__ == "__main__":
    main()
