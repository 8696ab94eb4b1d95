import sys, time
sys.path.insert(0, '/root/pkg/tests')
from helpers import s3xs3_on33, s4_on63
from axial.engine import run, EngineOptions
from axial.shape import shape_graph, enumerate_shapes

def go(name, mk, skip=()):
    group, tau = mk()
    shapes = enumerate_shapes(shape_graph(group, tau))
    print(name, 'labels:', [s.label for s in shapes], flush=True)
    for sh in shapes:
        if sh.label in skip:
            continue
        t0 = time.monotonic()
        r = run(group, tau, sh, EngineOptions(time_limit=900))
        d = r.algebra.dim if r.algebra else r.stats.get('final_dim')
        print('%s %-12s -> %-10s dim %-5s exp %d max %d  %.1fs' % (
            name, sh.label, r.status, d, r.stats['expansions'],
            r.stats['max_dim'], time.monotonic() - t0), flush=True)

go('S3xS3/33', s3xs3_on33, skip=('3A3A2A',))
go('S4/63', s4_on63)
