"""
abx: точная арифметика anti-blocking многогранников.

Подпакеты:
- exactgeom: рациональное ядро многогранников
- antiblocking: anti-blocking тела, двойственность, разрезания, неравенства
- cbodies: C-тела, поляры, теневые системы, симметризации
- coneab: anti-blocking тела относительно конуса
- posets: ЧУМ, линейные расширения, цепные многогранники
- commands: корпуса, проверочные наборы, CLI
"""
